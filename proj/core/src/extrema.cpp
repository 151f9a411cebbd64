#include "alif/extrema.hpp"

#include <algorithm>

namespace alif {

std::vector<std::size_t> extrema_indices(std::span<const double> s) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j + 1 < s.size(); ++j) {
    const double lo = std::min(s[j - 1], s[j + 1]);
    const double hi = std::max(s[j - 1], s[j + 1]);
    if (s[j] > hi || s[j] < lo) out.push_back(j);
  }
  return out;
}

}  // namespace alif
