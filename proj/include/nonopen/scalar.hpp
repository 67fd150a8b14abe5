#pragma once

#include <cmath>

namespace nonopen {

// t^n by repeated multiplication, n >= 0
inline double pow_int(double t, int n) {
    double r = 1.0;
    for (; n > 0; --n) r *= t;
    return r;
}

// |t|^p; integer p goes through repeated multiplication, non-integer p
// through exp(p*ln|t|)
inline double pow_abs(double t, double p) {
    const double a = std::abs(t);
    if (a == 0.0) return 0.0;
    if (p == std::floor(p) && p >= 0.0 && p < 1024.0) return pow_int(a, static_cast<int>(p));
    return std::exp(p * std::log(a));
}

// 2^{-k} with graceful underflow for huge k
inline double dyadic_weight(std::uint64_t k) {
    if (k > 1074) return 0.0;
    return std::ldexp(1.0, -static_cast<int>(k));
}

} // namespace nonopen
