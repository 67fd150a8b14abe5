// Test-side oracles, independent of the library code paths they check.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracles {

// Dense linear solve by Gaussian elimination with partial pivoting.
// A is row-major n x n; returns x with A x = b.
inline std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (a[piv * n + col] == 0.0) throw std::runtime_error("singular matrix");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t ri = n; ri-- > 0;) {
        double s = b[ri];
        for (std::size_t c = ri + 1; c < n; ++c) s -= a[ri * n + c] * x[c];
        x[ri] = s / a[ri * n + ri];
    }
    return x;
}

// Composite Simpson rule on [0,1] with an even number of panels.
template <typename F>
double simpson01(F&& f, int panels = 4096) {
    const double h = 1.0 / panels;
    double s = f(0.0) + f(1.0);
    for (int i = 1; i < panels; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
    return s * h / 3.0;
}

// Quadrature route for the two q=5 remainder integrals of one coordinate,
// split at the sign change of a + t b so Simpson sees smooth integrands.
inline std::pair<double, double> q5_remainders(double a, double b) {
    const auto fa = [&](double t) {
        const double u = a + t * b;
        return 5.0 * std::abs(a) * (u * u * u - a * a * a) * b;
    };
    const auto fb = [&](double t) {
        const double u = a + t * b;
        return 5.0 * (std::abs(u) - std::abs(a)) * u * u * u * b;
    };
    const double t0 = b != 0.0 ? -a / b : -1.0;
    if (t0 > 0.0 && t0 < 1.0) {
        const auto split = [&](const auto& f) {
            const auto left = [&](double t) { return f(t * t0); };
            const auto right = [&](double t) { return f(t0 + t * (1.0 - t0)); };
            return t0 * simpson01(left) + (1.0 - t0) * simpson01(right);
        };
        return {split(fa), split(fb)};
    }
    return {simpson01(fa), simpson01(fb)};
}

// Frozen pre-build reference values (bisection / closed form, computed
// independently before the library existed).
inline constexpr double kGamma1 = 1.531584393666495;   // n gamma = exp(n^2/gamma^2), n=1
inline constexpr double kGamma2 = 1.7763261256071852;  // n=2
inline constexpr double kGamma10 = 5.049549367677759;  // n=10
inline constexpr double kGamma100 = 35.005550392403265;
inline constexpr double kGamma1000 = 282.2716863597857;
inline constexpr double kThresholdDelta02 = 0.6590102289822608; // (1/ln 10)^(1/2)
inline constexpr double kQ5A_small = 0.080125; // A for x=e1, h=0.1 e1
inline constexpr double kQ5B_small = 0.030385; // B for x=e1, h=0.1 e1

} // namespace oracles
