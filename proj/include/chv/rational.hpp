#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chv {

using Int = boost::multiprecision::cpp_int;
// Canonical form maintained by boost: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& r) { return r.str(); }

Int factorial(unsigned n);

}  // namespace chv
