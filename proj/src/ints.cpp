#include "edgesub/ints.hpp"

#include <stdexcept>

namespace edgesub {

Int factorial(long n) {
    Int out = 1;
    for (long i = 2; i <= n; ++i) out *= i;
    return out;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int out = 1;
    for (long i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (base == 0) {
        if (exp > 0) return Rat(0);
        throw std::domain_error("rat_pow: negative power of zero");
    }
    Rat b = base;
    long e = exp;
    if (e < 0) {
        b = Rat(1) / b;
        e = -e;
    }
    Rat out = 1;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

}  // namespace edgesub
