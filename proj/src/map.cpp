#include "nonopen/map.hpp"

#include <cmath>

namespace nonopen {

double exp_neg_inv(double g) {
    if (g <= 0.0) return 0.0;
    return std::exp(-1.0 / g);
}

double exp_neg_inv_over_sq(double g) {
    if (g <= 0.0) return 0.0;
    return std::exp(-1.0 / g) / (g * g); // exp underflows first, so no 0/0
}

Vector f_eval(const MapSpec& map, const Vector& x) {
    const double g = gauge_eval(map.gauge, map.model, x);
    return scale(exp_neg_inv(g), x);
}

Vector jf_apply(const MapSpec& map, const Vector& x, const Vector& h) {
    const double g = gauge_eval(map.gauge, map.model, x);
    const double sigma = exp_neg_inv(g);
    if (sigma == 0.0) return zero_like(h);
    const double w = exp_neg_inv_over_sq(g);
    const double jh = gauge_grad_apply(map.gauge, map.model, x, h);
    return axpy(w * jh, x, scale(sigma, h));
}

SolveResult jf_solve(const MapSpec& map, const Vector& x, const Vector& y) {
    if (is_zero(x)) throw not_invertible_error("J_F is not invertible at the origin");
    const double g = gauge_eval(map.gauge, map.model, x);
    if (g <= 0.0) throw numerical_range_error("gauge value underflows at x");
    const double gx = gauge_grad_apply(map.gauge, map.model, x, x); // = degree * G > 0
    const double gy = gauge_grad_apply(map.gauge, map.model, x, y);
    const double denom = g * g + gx;
    const double coef = gy / denom; // (1/G^2) J_G(x)y / (1 + (1/G^2) J_G(x)x)
    // bracket d = y - coef*x, assembled through the gauge-transverse part;
    // the direct difference cancels catastrophically when y is nearly
    // parallel to x and G^2 << J_G(x)x
    const double ratio = gy / gx;
    const double parallel = ratio * (g * g) / denom;
    Vector d = axpy(parallel, x, axpy(-ratio, x, y));
    const double nd = strong_norm(map.model, d);
    if (nd == 0.0) {
        if (strong_norm(map.model, y) == 0.0) return {zero_like(y), 0.0, 0.0};
        throw numerical_range_error("bracket direction underflows");
    }

    const double inv_g = 1.0 / g;
    const double log_mag = inv_g + std::log(nd);
    if (inv_g > 700.0 || log_mag > 700.0) {
        const Vector unit = scale(1.0 / nd, d);
        const Vector r = sub(axpy(coef, x, d), y);
        const double scalar_defect = std::abs(coef * denom - gy) / (1.0 + std::abs(gy));
        return {unit, strong_norm(map.model, r) + scalar_defect, log_mag};
    }

    Vector h = scale(std::exp(inv_g), d);
    const Vector r = sub(jf_apply(map, x, h), y);
    return {std::move(h), strong_norm(map.model, r), 0.0};
}

Vector f_invert_radial(const MapSpec& map, const Vector& y) {
    const double ny = strong_norm(map.model, y);
    if (ny == 0.0) return zero_like(y);
    const Vector yhat = scale(1.0 / ny, y);
    const double ghat = gauge_eval(map.gauge, map.model, yhat);
    if (ghat <= 0.0)
        throw numerical_range_error("gauge of the direction underflows; preimage out of range");

    const double log_ghat = std::log(ghat);
    const double log_ny = std::log(ny);
    const double deg = static_cast<double>(map.gauge.degree());
    // phi(t) = ln t - 1/(t^deg * ghat) - ln||y||, strictly increasing;
    // the middle term is kept in log form so huge t cannot overflow it
    const auto phi = [&](double t) {
        const double lt = std::log(t);
        return lt - std::exp(-(deg * lt + log_ghat)) - log_ny;
    };

    double lo = ny; // phi(||y||) = -1/G(y) <= 0
    double hi = ny;
    bool bracketed = false;
    for (int i = 0; i < 1024; ++i) {
        if (phi(hi) > 0.0) {
            bracketed = true;
            break;
        }
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi)) break;
    }
    if (!bracketed)
        throw numerical_range_error("radial bisection bracket exceeds binary64 range");

    for (int i = 0; i < 200 && (hi - lo) > 1e-13 * hi; ++i) {
        const double mid = lo + 0.5 * (hi - lo);
        (phi(mid) > 0.0 ? hi : lo) = mid;
    }
    return scale(lo + 0.5 * (hi - lo), yhat);
}

} // namespace nonopen
