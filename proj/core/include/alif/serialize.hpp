#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "alif/counterexample.hpp"
#include "alif/decomposition.hpp"
#include "alif/filter.hpp"
#include "alif/length_function.hpp"
#include "alif/matrices.hpp"
#include "alif/spectral.hpp"

namespace alif {

using Json = nlohmann::ordered_json;

/// 17 significant digits, printf %.17g.
std::string format_double(double v);

/// Parses a JSON number, a decimal string, or a "p/q" fraction string.
double parse_scalar(const Json& v);

// Filters: {"type": "uniform"|"triangular"|"pwl", "nodes": [[x, v], ...], "normalized": bool}.
// Node coordinates are written as decimal strings.
Json filter_to_json(const Filter& f);
Filter filter_from_json(const Json& j);

// Lengths: {"type": "constant"|"step"|"tabulated", "nodes": [[x, L], ...]}.
// For "step" each node is (start of interval, value); the first start is 0.
Json length_to_json(const LengthFunction& l);
LengthFunction length_from_json(const Json& j);

void write_matrix_csv(std::ostream& os, const Matrix& m);
Matrix read_matrix_csv(std::istream& is);

/// Header: rows and cols as little-endian uint64, then row-major float64.
void write_matrix_binary(std::ostream& os, const Matrix& m);
Matrix read_matrix_binary(std::istream& is);

/// One sample per line; blank lines and lines starting with '#' are skipped.
std::vector<double> read_signal_csv(std::istream& is);
void write_vector_csv(std::ostream& os, std::span<const double> v);

Json to_json(const SpectralReport& r);
Json to_json(const DistributionCheck& c);
Json to_json(const SiftTelemetry& t);
Json to_json(const CounterexampleReport& r);

}  // namespace alif
