#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace goodies {

// Arbitrary-precision integer for sequence counts and binomials. These grow
// combinatorially, so fixed-width integers must not be used for them.
using Int = boost::multiprecision::cpp_int;

// Exact rational. cpp_rational keeps values fully reduced, which makes
// equality comparisons between independently computed quantities meaningful.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

}  // namespace goodies
