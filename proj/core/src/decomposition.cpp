#include "alif/decomposition.hpp"

#include <cmath>
#include <stdexcept>

#include "alif/extrema.hpp"

namespace alif {
namespace {

double norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

}  // namespace

Signal::Signal(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 3) throw std::invalid_argument("Signal: need at least 3 samples");
}

void SiftingConfig::validate() const {
  if (!(delta > 0.0) || max_inner == 0 || !(divergence_factor > 0.0) || max_imfs == 0)
    throw std::invalid_argument("SiftingConfig: all parameters must be positive");
}

std::string to_string(SiftStatus status) {
  switch (status) {
    case SiftStatus::converged: return "converged";
    case SiftStatus::iteration_cap: return "iteration_cap";
    case SiftStatus::diverged: return "diverged";
    case SiftStatus::stagnant: return "stagnant";
  }
  return "unknown";
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::extrema_exhausted: return "extrema_exhausted";
    case StopReason::max_imfs: return "max_imfs";
    case StopReason::diverged: return "diverged";
    case StopReason::stagnant: return "stagnant";
  }
  return "unknown";
}

std::size_t count_extrema(const Signal& s) { return extrema_indices(s.samples()).size(); }

std::vector<double> moving_average(const Signal& s, const IterationMatrix& k) {
  if (k.size() != s.size()) throw std::invalid_argument("moving_average: size mismatch");
  return k.apply(s.samples());
}

SiftResult sift(const Signal& s, const IterationMatrix& k, const SiftingConfig& cfg) {
  cfg.validate();
  if (k.size() != s.size()) throw std::invalid_argument("sift: size mismatch");

  std::vector<double> g(s.samples().begin(), s.samples().end());
  const double start_norm = norm2(g);
  SiftResult out;
  auto& tel = out.telemetry;
  tel.status = SiftStatus::iteration_cap;

  for (std::size_t m = 1; m <= cfg.max_inner; ++m) {
    const auto avg = k.apply(g);
    const double change = norm2(avg);  // ||g_{m+1} - g_m||
    const double prev_norm = norm2(g);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] -= avg[i];
    const double next_norm = norm2(g);

    tel.iterations = m;
    tel.relative_change = prev_norm > 0.0 ? change / prev_norm : 0.0;
    tel.norm = next_norm;

    if (next_norm == 0.0 || change <= cfg.delta * prev_norm) {
      tel.status = SiftStatus::converged;
      break;
    }
    if (next_norm > cfg.divergence_factor * start_norm) {
      tel.status = SiftStatus::diverged;
      break;
    }
  }
  out.imf = std::move(g);
  return out;
}

LengthStrategy extrema_length_strategy(double multiplier) {
  return [multiplier](std::span<const double> r) { return extrema_based_length(r, multiplier); };
}

LengthStrategy fixed_length_strategy(LengthFunction length) {
  return [length = std::move(length)](std::span<const double>) { return length; };
}

DecompositionResult decompose(const Signal& s, const Filter& f, const LengthStrategy& strategy,
                              const SiftingConfig& cfg) {
  cfg.validate();
  // normalization is judged by the filter's own 1e-6 flag, the axioms at 1e-9
  const auto check = validate_filter(f, 1e-9);
  if (!(check.even && check.nonnegative && check.supported && f.normalized()))
    throw std::invalid_argument("decompose: filter fails validation");

  DecompositionResult result;
  std::vector<double> r(s.samples().begin(), s.samples().end());
  const std::size_t n = r.size();
  result.stop_reason = StopReason::extrema_exhausted;

  while (extrema_indices(r).size() >= 2) {
    if (result.imfs.size() >= cfg.max_imfs) {
      result.stop_reason = StopReason::max_imfs;
      break;
    }
    const auto k = build_K(f, strategy(r), n);
    auto sifted = sift(Signal(r), k, cfg);

    if (sifted.telemetry.status == SiftStatus::diverged) {
      result.telemetry.push_back(sifted.telemetry);
      result.stop_reason = StopReason::diverged;
      break;
    }
    if (norm2(sifted.imf) <= 1e-12 * norm2(r)) {
      sifted.telemetry.status = SiftStatus::stagnant;
      result.telemetry.push_back(sifted.telemetry);
      result.stop_reason = StopReason::stagnant;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) r[i] -= sifted.imf[i];
    result.imfs.push_back(std::move(sifted.imf));
    result.telemetry.push_back(sifted.telemetry);
  }
  result.trend = std::move(r);
  return result;
}

}  // namespace alif
