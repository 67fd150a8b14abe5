#pragma once

#include <string>

#include "nonopen/space_model.hpp"

namespace nonopen {

enum class GaugeKind {
    WeightedL2,    // G(x) = sum x_k^2 / k
    Dyadic,        // G(x) = sum x_k^2 / 2^k
    LqEven,        // G(x) = sum x_k^q, q even
    L5Odd,         // G(x) = sum |x_k|^5
    GridSquare,    // G(f) = (1/M) sum v_i^2
    WeakSepDyadic, // G(x) = sum l_k(x)^2 / 2^k
};

/**
 * A gauge G: the weak norm raised to its degree, optionally taken to an
 * extra integer power m (the map module composes exp(-1/.) on the value
 * returned here). The directional derivative is analytic per kind:
 *
 *   WeightedL2     J_G(x)h = sum 2 x_k h_k / k
 *   Dyadic         J_G(x)h = sum x_k h_k / 2^{k-1}
 *   LqEven         J_G(x)h = q sum x_k^{q-1} h_k
 *   L5Odd          J_G(x)h = sum 5 |x_k| x_k^3 h_k
 *   GridSquare     J_G(f)h = (2/M) sum f_i h_i
 *   WeakSepDyadic  J_G(x)h = sum l_k(x) l_k(h) / 2^{k-1}
 *
 * with the chain rule m G^{m-1} J_G(x)h applied on top when power m > 1.
 */
struct GaugeSpec {
    GaugeKind kind = GaugeKind::WeightedL2;
    int q = 0;     // LqEven only
    int power = 1; // gauge used as G^power
    FunctionalFamily family{FamilyKind::Coordinate}; // WeakSepDyadic only

    static GaugeSpec weighted_l2(int power = 1);
    static GaugeSpec dyadic(int power = 1);
    static GaugeSpec lq_even(int q, int power = 1);
    static GaugeSpec l5_odd(int power = 1);
    static GaugeSpec grid_square(int power = 1);
    static GaugeSpec weaksep(FamilyKind family, int power = 1);

    // Homogeneity degree of the base gauge (2, 2, q, 5, 2, 2).
    int base_degree() const;

    // Homogeneity degree including the power: G^m(t x) = t^degree G^m(x).
    // This is the exponent s of the weak norm, G^m = |||x|||^degree.
    int degree() const { return base_degree() * power; }

    std::string id() const;
};

// Throws config_error unless the gauge can live on the model
// (LqEven: q even, q >= p; L5Odd: p <= 5; GridSquare: p >= 2;
//  WeakSepDyadic: matching family; kinds must pair up).
void check_compatible(const GaugeSpec& gauge, const SpaceModel& model);

// G(x)^power, exact on finite support.
double gauge_eval(const GaugeSpec& gauge, const SpaceModel& model, const Vector& x);

// Directional derivative of gauge_eval at x in direction h.
double gauge_grad_apply(const GaugeSpec& gauge, const SpaceModel& model, const Vector& x,
                        const Vector& h);

// gauge_eval^{1/degree}: the weak norm |||x|||.
double weak_norm(const GaugeSpec& gauge, const SpaceModel& model, const Vector& x);

struct LipschitzBound {
    double estimate; // sup of |J_G(x+z)h - J_G(x)h| over the probe set; a lower bound
    double bound;    // analytic Lipschitz bound; estimate <= bound always
};

/**
 * Probes J_G(x+z) - J_G(x) against all coordinate directions in the union
 * of supports plus 32 seeded random unit vectors, and pairs the resulting
 * operator-norm lower estimate with the analytic bound for the gauge:
 *
 *   WeightedL2     2 ||z||_2
 *   Dyadic         2 ||z||_inf
 *   LqEven         q ||z||_p^{q-1} + q sum_{i=1}^{q-2} C(q-1,i) ||z||_p^i ||x||_p^{q-1-i}
 *   L5Odd          5 ||z||_5 ||x||_5^3 + 5 ||z||_5 (||x||_5^2 + ||x||_5 ||y||_5 + ||y||_5^2) ||y||_5,  y = x+z
 *   GridSquare     2 ||z||_p
 *   WeakSepDyadic  2 ||z||_inf
 *
 * For power m > 1 the bound composes by the chain rule using the exact
 * gauge values at x and x+z:
 *   m * max(G_x,G_y)^{m-1} * base_bound + m * |G_y^{m-1} - G_x^{m-1}| * base_opnorm(x).
 */
LipschitzBound gauge_grad_lipschitz_bound(const GaugeSpec& gauge, const SpaceModel& model,
                                          const Vector& x, const Vector& z);

// True iff some l_k with k <= max support index of x has l_k(x) != 0.
// Exact for the built-in families. Requires x != 0.
bool family_separation_check(const FunctionalFamily& family, const SparseVector& x);

} // namespace nonopen
