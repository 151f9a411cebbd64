#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace alif {

/// Indices j in [1, n-2] that are strict local maxima or minima.
std::vector<std::size_t> extrema_indices(std::span<const double> samples);

}  // namespace alif
