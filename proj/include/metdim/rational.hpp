#ifndef METDIM_RATIONAL_HPP
#define METDIM_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace metdim {

// Exact rational arithmetic with arbitrary-precision integers. Values are
// always kept in canonical form (reduced, positive denominator) by the
// backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Canonical serialization: "p/q", or just "p" when q = 1.
std::string rational_to_string(const Rational& r);

// Inverse of rational_to_string; accepts "p" and "p/q". Throws Error(ParseError).
Rational rational_from_string(const std::string& text);

} // namespace metdim

#endif
