#include "alif/filter.hpp"

#include <stdexcept>

namespace alif {
namespace {

constexpr std::size_t kQuadraturePoints = 10001;

}  // namespace

std::string to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::uniform: return "uniform";
    case FilterKind::triangular: return "triangular";
    case FilterKind::piecewise_linear: return "pwl";
    case FilterKind::custom: return "custom";
  }
  return "unknown";
}

double Filter::base(double y) const {
  y = std::abs(y);
  if (!(y < 1.0)) return 0.0;
  switch (kind_) {
    case FilterKind::uniform: return y <= 0.5 ? 1.0 : 0.0;
    case FilterKind::triangular: return 1.0 - y;
    case FilterKind::piecewise_linear: return interpolate_even_pwl<double>(nodes_, y);
    case FilterKind::custom: return custom_(y);
  }
  return 0.0;
}

double Filter::evaluate(double y) const {
  return scale_ == 1.0 ? base(y) : scale_ * base(y);
}

Filter make_uniform_filter() {
  Filter f;
  f.kind_ = FilterKind::uniform;
  f.sup_abs_ = 1.0;
  f.l1_mass_ = 1.0;
  return f;
}

Filter make_triangular_filter() {
  Filter f;
  f.kind_ = FilterKind::triangular;
  f.sup_abs_ = 1.0;
  f.l1_mass_ = 1.0;
  return f;
}

Filter make_pwl_filter(std::span<const Node> nodes) {
  if (nodes.empty()) throw std::invalid_argument("pwl filter: empty node list");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (!(n.x >= 0.0 && n.x <= 1.0))
      throw std::invalid_argument("pwl filter: abscissa outside [0, 1]");
    if (!(n.value >= 0.0)) throw std::invalid_argument("pwl filter: negative value");
    if (i > 0 && !(nodes[i - 1].x < n.x))
      throw std::invalid_argument("pwl filter: abscissas must be strictly increasing");
  }
  if (nodes.back().x == 1.0 && nodes.back().value != 0.0)
    throw std::invalid_argument("pwl filter: value at abscissa 1 must be 0");

  Filter f;
  f.kind_ = FilterKind::piecewise_linear;
  if (nodes.front().x != 0.0) f.nodes_.push_back({0.0, nodes.front().value});
  f.nodes_.insert(f.nodes_.end(), nodes.begin(), nodes.end());
  if (f.nodes_.back().x != 1.0) f.nodes_.push_back({1.0, 0.0});

  double mass = 0.0;
  double sup = 0.0;
  for (std::size_t i = 0; i + 1 < f.nodes_.size(); ++i) {
    const auto& a = f.nodes_[i];
    const auto& b = f.nodes_[i + 1];
    mass += (b.x - a.x) * (a.value + b.value);  // twice the half-line trapezoid
  }
  for (const auto& n : f.nodes_) sup = std::max(sup, n.value);
  f.l1_mass_ = mass;
  f.sup_abs_ = sup;
  return f;
}

Filter make_custom_filter(Filter::Evaluable profile) {
  if (!profile) throw std::invalid_argument("custom filter: empty profile");
  Filter f;
  f.kind_ = FilterKind::custom;
  f.custom_ = std::move(profile);

  const double h = 2.0 / static_cast<double>(kQuadraturePoints - 1);
  double mass = 0.0;
  double sup = 0.0;
  for (std::size_t i = 0; i < kQuadraturePoints; ++i) {
    const double y = -1.0 + h * static_cast<double>(i);
    const double v = f.base(y);
    const double w = (i == 0 || i + 1 == kQuadraturePoints) ? 0.5 : 1.0;
    mass += w * std::abs(v);
    sup = std::max(sup, std::abs(v));
  }
  f.l1_mass_ = mass * h;
  f.sup_abs_ = sup;
  return f;
}

Filter scale_filter(const Filter& f, double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("scale_filter: factor must be positive");
  Filter out = f;
  out.scale_ = f.scale_ * factor;
  out.sup_abs_ = f.sup_abs_ * factor;
  out.l1_mass_ = f.l1_mass_ * factor;
  return out;
}

Filter normalize_filter(const Filter& f) {
  if (!(f.l1_mass_ > 0.0)) throw std::invalid_argument("normalize_filter: zero mass filter");
  if (f.l1_mass_ == 1.0) return f;
  Filter out = f;
  out.scale_ = f.scale_ / f.l1_mass_;
  out.sup_abs_ = f.sup_abs_ / f.l1_mass_;
  out.l1_mass_ = 1.0;
  return out;
}

ValidationReport validate_filter(const Filter& f, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("validate_filter: tol must be positive");
  ValidationReport r{true, true, true, true};
  const double h = 2.0 / static_cast<double>(kQuadraturePoints - 1);
  for (std::size_t i = 0; i < kQuadraturePoints; ++i) {
    const double y = -1.0 + h * static_cast<double>(i);
    const double v = f(y);
    if (std::abs(v - f(-y)) > tol) r.even = false;
    if (v < -tol) r.nonnegative = false;
  }
  for (double y : {1.0, 1.0 + 1e-9, 1.25, 1.5, 2.0, 10.0}) {
    if (std::abs(f(y)) > tol || std::abs(f(-y)) > tol) r.supported = false;
  }
  r.normalized = f.l1_mass() > 0.0 && std::abs(f.l1_mass() - 1.0) <= tol;
  return r;
}

}  // namespace alif
