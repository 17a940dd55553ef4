#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphon {

// Exact rational arithmetic for all geometry: breakpoints, block values,
// incidence columns, facet normals and LP pivots. Always kept canonical
// (positive denominator, gcd 1) by the backing type.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Grammar: optional '-', digits, optionally '/' digits. Denominator must be
// positive. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// Canonical form: "n" when the denominator is 1, else "n/d".
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace graphon
