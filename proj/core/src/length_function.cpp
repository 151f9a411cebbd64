#include "alif/length_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alif/extrema.hpp"

namespace alif {
namespace {

constexpr std::size_t kSamplePoints = 10001;

}  // namespace

std::string to_string(LengthKind kind) {
  switch (kind) {
    case LengthKind::constant: return "constant";
    case LengthKind::step: return "step";
    case LengthKind::tabulated: return "tabulated";
    case LengthKind::continuous: return "continuous";
  }
  return "unknown";
}

double LengthFunction::evaluate(double x) const {
  switch (kind_) {
    case LengthKind::constant: return values_.front();
    case LengthKind::step: {
      const auto idx = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) - breakpoints_.begin();
      return values_[static_cast<std::size_t>(idx)];
    }
    case LengthKind::tabulated: {
      if (x <= nodes_.front().x) return nodes_.front().value;
      if (x >= nodes_.back().x) return nodes_.back().value;
      auto hi = std::upper_bound(nodes_.begin(), nodes_.end(), x,
                                 [](double v, const Node& n) { return v < n.x; });
      const auto& a = *(hi - 1);
      if (a.x == x) return a.value;
      const auto& b = *hi;
      return a.value + (b.value - a.value) * (x - a.x) / (b.x - a.x);
    }
    case LengthKind::continuous: return fn_(x);
  }
  return 0.0;
}

LengthFunction make_constant_length(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("constant length must be positive");
  LengthFunction l;
  l.kind_ = LengthKind::constant;
  l.values_ = {c};
  l.lower_ = c;
  l.upper_ = c;
  return l;
}

LengthFunction make_step_length(std::span<const double> breakpoints, std::span<const double> values) {
  if (values.size() != breakpoints.size() + 1)
    throw std::invalid_argument("step length: need one more value than breakpoints");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > 0.0 && breakpoints[i] < 1.0))
      throw std::invalid_argument("step length: breakpoints must lie in (0, 1)");
    if (i > 0 && !(breakpoints[i - 1] < breakpoints[i]))
      throw std::invalid_argument("step length: breakpoints must be strictly increasing");
  }
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("step length: values must be positive");
  }
  LengthFunction l;
  l.kind_ = LengthKind::step;
  l.breakpoints_.assign(breakpoints.begin(), breakpoints.end());
  l.values_.assign(values.begin(), values.end());
  l.lower_ = *std::min_element(values.begin(), values.end());
  l.upper_ = *std::max_element(values.begin(), values.end());
  return l;
}

LengthFunction make_tabulated_length(std::span<const Node> nodes) {
  if (nodes.empty()) throw std::invalid_argument("tabulated length: empty node list");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!(nodes[i].x >= 0.0 && nodes[i].x <= 1.0))
      throw std::invalid_argument("tabulated length: abscissa outside [0, 1]");
    if (i > 0 && !(nodes[i - 1].x < nodes[i].x))
      throw std::invalid_argument("tabulated length: abscissas must be strictly increasing");
    if (!(nodes[i].value > 0.0) || !std::isfinite(nodes[i].value))
      throw std::invalid_argument("tabulated length: values must be positive");
  }
  LengthFunction l;
  l.kind_ = LengthKind::tabulated;
  l.nodes_.assign(nodes.begin(), nodes.end());
  auto [lo, hi] = std::minmax_element(nodes.begin(), nodes.end(),
                                      [](const Node& a, const Node& b) { return a.value < b.value; });
  l.lower_ = lo->value;
  l.upper_ = hi->value;
  return l;
}

LengthFunction make_continuous_length(LengthFunction::Evaluable fn) {
  if (!fn) throw std::invalid_argument("continuous length: empty function");
  double lo = HUGE_VAL;
  double hi = -HUGE_VAL;
  for (std::size_t i = 0; i < kSamplePoints; ++i) {
    const double v = fn(static_cast<double>(i) / static_cast<double>(kSamplePoints - 1));
    if (!std::isfinite(v)) throw std::invalid_argument("continuous length: non-finite value");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(lo > 0.0)) throw std::invalid_argument("continuous length: must be strictly positive");
  LengthFunction l;
  l.kind_ = LengthKind::continuous;
  l.fn_ = std::move(fn);
  l.lower_ = lo;
  l.upper_ = hi;
  return l;
}

LengthFunction extrema_based_length(std::span<const double> signal, double multiplier) {
  if (!(multiplier > 0.0)) throw std::invalid_argument("extrema length: multiplier must be positive");
  const auto ext = extrema_indices(signal);
  if (ext.size() < 2) throw std::invalid_argument("extrema length: fewer than two extrema");

  const std::size_t n = signal.size();
  std::vector<Node> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto hi = static_cast<std::size_t>(std::upper_bound(ext.begin(), ext.end(), i) - ext.begin());
    hi = std::clamp<std::size_t>(hi, 1, ext.size() - 1);
    const double spacing = static_cast<double>(ext[hi] - ext[hi - 1]);
    nodes[i] = {static_cast<double>(i) / static_cast<double>(n - 1), std::max(1.0, multiplier * spacing)};
  }
  return make_tabulated_length(nodes);
}

}  // namespace alif
