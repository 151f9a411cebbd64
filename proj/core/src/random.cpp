#include "alif/random.hpp"

#include <random>

namespace alif {

std::vector<double> seeded_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<double> out(n);
  for (auto& v : out) {
    const auto bits = engine() >> 11;  // 53 random bits
    v = 2.0 * (static_cast<double>(bits) * 0x1.0p-53) - 1.0;
  }
  return out;
}

}  // namespace alif
