#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace edgesub {

// Exact arithmetic for every counting path. Coefficients grow factorially,
// so no fixed-width integers anywhere counts are accumulated.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(long n);
Int binomial(long n, long k);

// base^exp with the convention 0^0 = 1. Negative exponents require base != 0.
Rat rat_pow(const Rat& base, long exp);

}  // namespace edgesub
