#include "alif/serialize.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace alif {
namespace {

std::vector<Node> parse_nodes(const Json& j) {
  std::vector<Node> nodes;
  if (!j.contains("nodes")) return nodes;
  for (const auto& pair : j.at("nodes")) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("nodes must be [x, value] pairs");
    nodes.push_back({parse_scalar(pair[0]), parse_scalar(pair[1])});
  }
  return nodes;
}

Json nodes_to_json(std::span<const Node> nodes, double scale = 1.0) {
  Json arr = Json::array();
  for (const auto& n : nodes) arr.push_back(Json::array({format_double(n.x), format_double(scale * n.value)}));
  return arr;
}

std::uint64_t to_little(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xffu) << (8 * (7 - i));
    return r;
  }
}

void put_u64(std::ostream& os, std::uint64_t v) {
  v = to_little(v);
  char buf[8];
  std::memcpy(buf, &v, 8);
  os.write(buf, 8);
}

std::uint64_t get_u64(std::istream& is) {
  char buf[8];
  if (!is.read(buf, 8)) throw std::runtime_error("binary matrix: truncated input");
  std::uint64_t v;
  std::memcpy(&v, buf, 8);
  return to_little(v);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_scalar(const Json& v) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) throw std::invalid_argument("expected a number or numeric string");
  const auto s = v.get<std::string>();
  try {
    std::size_t pos = 0;
    if (const auto slash = s.find('/'); slash != std::string::npos) {
      const double num = std::stod(s.substr(0, slash), &pos);
      if (pos != slash) throw std::invalid_argument(s);
      const auto rest = s.substr(slash + 1);
      const double den = std::stod(rest, &pos);
      if (pos != rest.size()) throw std::invalid_argument(s);
      return num / den;
    }
    const double out = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return out;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
}

Json filter_to_json(const Filter& f) {
  Json j;
  switch (f.kind()) {
    case FilterKind::uniform:
      if (f.scale() != 1.0) throw std::invalid_argument("filter_to_json: scaled uniform filter is not representable");
      j["type"] = "uniform";
      j["nodes"] = Json::array();
      j["normalized"] = true;
      return j;
    case FilterKind::triangular:
      if (f.scale() == 1.0) {
        j["type"] = "triangular";
        j["nodes"] = Json::array();
        j["normalized"] = true;
        return j;
      } else {
        const std::array<Node, 2> nodes{Node{0.0, 1.0}, Node{1.0, 0.0}};
        j["type"] = "pwl";
        j["nodes"] = nodes_to_json(nodes, f.scale());
        j["normalized"] = false;
        return j;
      }
    case FilterKind::piecewise_linear: {
      // a normalized filter is stored as its raw nodes plus the flag
      const bool norm = f.normalized() && f.scale() != 1.0;
      j["type"] = "pwl";
      j["nodes"] = nodes_to_json(f.nodes(), norm ? 1.0 : f.scale());
      j["normalized"] = norm;
      return j;
    }
    case FilterKind::custom: break;
  }
  throw std::invalid_argument("filter_to_json: custom filters are not serializable");
}

Filter filter_from_json(const Json& j) {
  const auto type = j.at("type").get<std::string>();
  const bool normalized = j.value("normalized", false);
  Filter f = [&] {
    if (type == "uniform") return make_uniform_filter();
    if (type == "triangular") return make_triangular_filter();
    if (type == "pwl") return make_pwl_filter(parse_nodes(j));
    throw std::invalid_argument("unknown filter type '" + type + "'");
  }();
  return normalized ? normalize_filter(f) : f;
}

Json length_to_json(const LengthFunction& l) {
  Json j;
  j["type"] = to_string(l.kind());
  std::vector<Node> nodes;
  switch (l.kind()) {
    case LengthKind::constant: nodes.push_back({0.0, l.values().front()}); break;
    case LengthKind::step:
      nodes.push_back({0.0, l.values()[0]});
      for (std::size_t i = 0; i < l.breakpoints().size(); ++i) nodes.push_back({l.breakpoints()[i], l.values()[i + 1]});
      break;
    case LengthKind::tabulated: nodes.assign(l.nodes().begin(), l.nodes().end()); break;
    case LengthKind::continuous:
      throw std::invalid_argument("length_to_json: continuous length functions are not serializable");
  }
  j["nodes"] = nodes_to_json(nodes);
  return j;
}

LengthFunction length_from_json(const Json& j) {
  const auto type = j.at("type").get<std::string>();
  const auto nodes = parse_nodes(j);
  if (type == "constant") {
    if (nodes.size() != 1) throw std::invalid_argument("constant length needs exactly one node");
    return make_constant_length(nodes.front().value);
  }
  if (type == "step") {
    if (nodes.empty() || nodes.front().x != 0.0)
      throw std::invalid_argument("step length: first node must start at 0");
    std::vector<double> breaks;
    std::vector<double> values;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i > 0) breaks.push_back(nodes[i].x);
      values.push_back(nodes[i].value);
    }
    return make_step_length(breaks, values);
  }
  if (type == "tabulated") return make_tabulated_length(nodes);
  throw std::invalid_argument("unknown length type '" + type + "'");
}

void write_matrix_csv(std::ostream& os, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << format_double(m(i, j));
    }
    os << '\n';
  }
}

Matrix read_matrix_csv(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(parse_scalar(Json(cell)));
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("matrix csv: ragged rows");
    rows.push_back(std::move(row));
  }
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.empty() ? 0 : rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

void write_matrix_binary(std::ostream& os, const Matrix& m) {
  put_u64(os, static_cast<std::uint64_t>(m.rows()));
  put_u64(os, static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) put_u64(os, std::bit_cast<std::uint64_t>(m(i, j)));
}

Matrix read_matrix_binary(std::istream& is) {
  const auto rows = get_u64(is);
  const auto cols = get_u64(is);
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = std::bit_cast<double>(get_u64(is));
  return m;
}

std::vector<double> read_signal_csv(std::istream& is) {
  std::vector<double> out;
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(parse_scalar(Json(line.substr(first, last - first + 1))));
  }
  return out;
}

void write_vector_csv(std::ostream& os, std::span<const double> v) {
  for (double x : v) os << format_double(x) << '\n';
}

Json to_json(const SpectralReport& r) {
  Json j;
  Json ev = Json::array();
  for (const auto& z : r.eigenvalues) ev.push_back(Json::array({z.real(), z.imag()}));
  j["eigenvalues"] = std::move(ev);
  j["singular_values"] = r.singular_values;
  j["spectral_radius_of_iteration"] = r.spectral_radius_of_iteration;
  j["max_imag"] = r.max_imag;
  j["necessary_condition_ok"] = r.necessary_condition_ok;
  return j;
}

Json to_json(const DistributionCheck& c) {
  Json j;
  j["n"] = c.n;
  j["discrepancy"] = c.discrepancy;
  j["max_imag"] = c.max_imag;
  j["outlier_fraction"] = c.outlier_fraction;
  j["epsilon"] = c.epsilon;
  j["test_function_gap"] = c.test_function_gap;
  return j;
}

Json to_json(const SiftTelemetry& t) {
  Json j;
  j["iterations"] = t.iterations;
  j["relative_change"] = t.relative_change;
  j["norm"] = t.norm;
  j["status"] = to_string(t.status);
  return j;
}

Json to_json(const CounterexampleReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["seed"] = r.seed;
  j["determinant"] = r.determinant;
  j["min_eigenvalue"] = r.min_eigenvalue;
  j["rho_iteration"] = r.rho_iteration;
  j["growth_rate"] = r.growth_rate;
  j["l1_mass"] = r.l1_mass;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["value"] = c.value;
    cj["expected"] = c.expected;
    cj["tolerance"] = c.tolerance;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace alif
