#pragma once

#include <cstdint>
#include <vector>

namespace alif {

/// Default seed echoed by every CLI output.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Deterministic samples uniform on [-1, 1), identical on every platform
/// (raw mt19937_64 output mapped by hand, no std distributions).
std::vector<double> seeded_signal(std::size_t n, std::uint64_t seed);

}  // namespace alif
