#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "alif/filter.hpp"
#include "alif/length_function.hpp"
#include "alif/matrices.hpp"

namespace alif {

/// Samples on x_i = i/(n-1); at least three of them.
class Signal {
 public:
  explicit Signal(std::vector<double> samples);

  std::size_t size() const { return samples_.size(); }
  std::span<const double> samples() const { return samples_; }

 private:
  std::vector<double> samples_;
};

struct SiftingConfig {
  double delta = 1e-3;               ///< relative change that stops sifting
  std::size_t max_inner = 200;       ///< inner iteration cap
  double divergence_factor = 1e8;    ///< ||g_m|| > factor * ||g_1|| means diverged
  std::size_t max_imfs = 32;

  void validate() const;
};

enum class SiftStatus { converged, iteration_cap, diverged, stagnant };

std::string to_string(SiftStatus status);

struct SiftTelemetry {
  std::size_t iterations = 0;
  double relative_change = 0.0;
  double norm = 0.0;  ///< ||returned iterate||_2
  SiftStatus status = SiftStatus::converged;
};

struct SiftResult {
  std::vector<double> imf;
  SiftTelemetry telemetry;
};

enum class StopReason { extrema_exhausted, max_imfs, diverged, stagnant };

std::string to_string(StopReason reason);

struct DecompositionResult {
  std::vector<std::vector<double>> imfs;
  std::vector<double> trend;
  std::vector<SiftTelemetry> telemetry;  ///< one entry per sift, including a final rejected one
  StopReason stop_reason = StopReason::extrema_exhausted;
};

/// Number of strict interior extrema.
std::size_t count_extrema(const Signal& s);

/// K s. Throws std::invalid_argument on a size mismatch.
std::vector<double> moving_average(const Signal& s, const IterationMatrix& k);

/// Iterates g <- (I - K) g from g_1 = s until the relative change drops below
/// delta, the iterate becomes exactly zero, the cap is reached, or the norm
/// exceeds divergence_factor * ||g_1||.
SiftResult sift(const Signal& s, const IterationMatrix& k, const SiftingConfig& cfg);

/// Chooses L from the current remainder.
using LengthStrategy = std::function<LengthFunction(std::span<const double>)>;

LengthStrategy extrema_length_strategy(double multiplier = 2.0);
LengthStrategy fixed_length_strategy(LengthFunction length);

/// Discrete ALIF outer loop. Always returns imfs and trend whose sum is the
/// input. A sift that diverges, or yields an IMF with norm <= 1e-12 ||r||
/// (stagnant), ends the loop; its iterate is reported in telemetry only.
/// Throws std::invalid_argument if the filter fails validation.
DecompositionResult decompose(const Signal& s, const Filter& f, const LengthStrategy& strategy,
                              const SiftingConfig& cfg = {});

}  // namespace alif
