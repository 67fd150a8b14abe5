#pragma once

#include <string>

#include "nonopen/gauge.hpp"

namespace nonopen {

// exp(-1/g) with the convention 1/0 = inf, exp(-inf) = 0
double exp_neg_inv(double g);

// exp(-1/g) / g^2, understood as 0 at g = 0
double exp_neg_inv_over_sq(double g);

/**
 * The map F(x) = exp(-1/G(x)) * x over a compatible (model, gauge) pair.
 * F is C^1 with J_F(0) = 0; the origin is its unique critical point. At
 * x != 0 the derivative is
 *
 *   J_F(x)h = exp(-1/G) * (J_G(x)h / G^2) * x + exp(-1/G) * h,
 *
 * an invertible identity-plus-rank-one operator (up to the scalar factor).
 */
struct MapSpec {
    SpaceModel model;
    GaugeSpec gauge;

    MapSpec(SpaceModel m, GaugeSpec g) : model(std::move(m)), gauge(std::move(g)) {
        check_compatible(gauge, model);
    }

    std::string id() const { return model.id() + " / " + gauge.id(); }
};

Vector f_eval(const MapSpec& map, const Vector& x);

// J_F(x) applied to h; returns 0 at x = 0.
Vector jf_apply(const MapSpec& map, const Vector& x, const Vector& h);

/**
 * Solution of J_F(x) h = y.
 *
 * When log_scale == 0, `solution` is h itself and `residual` is the norm of
 * jf_apply(x, solution) - y. When the factor exp(1/G) would overflow
 * binary64, `solution` is a unit-norm direction, the true solution is
 * exp(log_scale) * solution, and `residual` is computed in the scaled
 * domain: the norm of c*x + d - y with d the unscaled bracket and
 * c = J_G(x)y / (G^2 + J_G(x)x) the algebraically equivalent factored
 * coefficient, plus the relative defect of the rank-one scalar equation
 * c * (G^2 + J_G(x)x) = J_G(x)y.
 */
struct SolveResult {
    Vector solution;
    double residual = 0.0;
    double log_scale = 0.0;
};

// Rank-one closed-form solve:
//   h = exp(1/G) * [ y - ((1/G^2) J_G(x)y / (1 + (1/G^2) J_G(x)x)) * x ].
// The denominator is 1 + degree*G/G^2 > 1. Throws not_invertible_error at
// x = 0. Switches to log-scaled output when 1/G > 700 or when the assembled
// magnitude would overflow.
SolveResult jf_solve(const MapSpec& map, const Vector& x, const Vector& y);

// The unique preimage x = t * (y/||y||), t >= 0, with f_eval(x) = y.
// Solves ln t - 1/G(t yhat) = ln ||y|| by monotone bisection in the log
// domain (bracket grown by doubling from t = ||y||, at most 2^10 steps;
// 200 bisection iterations or relative width 1e-13). Throws
// numerical_range_error when the preimage magnitude exceeds binary64.
Vector f_invert_radial(const MapSpec& map, const Vector& y);

} // namespace nonopen
