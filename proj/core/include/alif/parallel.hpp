#pragma once

#include <cstddef>
#include <functional>

namespace alif {

/// Worker cap from ALIF_SPECTRA_THREADS, falling back to hardware concurrency.
std::size_t thread_cap();

/// Runs body(i) for i in [0, count). Each index is handled by exactly one
/// worker, so callers that write results into slot i get deterministic output.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace alif
