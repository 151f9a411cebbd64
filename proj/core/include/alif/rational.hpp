#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace alif {

/// Exact rational arithmetic, used where reproduction must be bit-faithful.
using Rational = boost::multiprecision::cpp_rational;

inline Rational ratio(long long num, long long den) { return Rational(num) / Rational(den); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace alif
