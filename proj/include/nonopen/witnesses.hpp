#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nonopen/map.hpp"

namespace nonopen {

/**
 * Record of the implicit equation  n * gamma = exp(n^s / gamma^s),
 * solved in log form  ln n + ln gamma = n^s / gamma^s.
 * `gamma` is the norm of the preimage of z_n = y_n / n through the map,
 * and `satisfied` is the comparison gamma >= sqrt(n).
 */
struct GammaRecord {
    std::uint64_t n = 0;
    double s = 2.0;
    double gamma = 0.0;
    double sqrt_n = 0.0;
    bool satisfied = false;
    double residual = 0.0; // |ln n + ln gamma - n^s/gamma^s| at the returned root
};

// Root of ln(nu) + ln(g) = nu^s / g^s for real nu >= 1 (monotone bisection).
double solve_gamma(double s, double nu);

std::vector<GammaRecord> gamma_sequence(double s, const std::vector<std::uint64_t>& n_list);

/**
 * Certificate that (delta/2) * y has no preimage inside the open unit
 * ball: any unit y whose weak norm falls below (1 / ln(2/delta))^{1/s}
 * exhibits the failure of openness at the origin. certified == false
 * draws no conclusion.
 */
struct NoPreimageCertificate {
    double delta = 0.0;
    double s = 0.0;
    double threshold = 0.0;   // (1 / ln(2/delta))^{1/s}
    double weak_norm_y = 0.0; // |||y|||
    bool certified = false;   // weak_norm_y < threshold
};

// Requires delta in (0,1) and ||y|| = 1 within 1e-12.
NoPreimageCertificate certify_no_preimage(const MapSpec& map, double delta, const Vector& y);

enum class PointClass { Critical, Regular };

struct Classification {
    PointClass cls = PointClass::Critical;
    double max_residual = 0.0; // worst relative residual of the probe solves
    bool log_scale_used = false;
};

// Critical exactly at x = 0; regularity at x != 0 is validated
// constructively by solving J_F(x) h = e_i for probe targets.
Classification classify_point(const MapSpec& map, const Vector& x);

struct DivergenceRow {
    std::uint64_t n = 0;
    double nu = 0.0;        // 1 / |||y_n|||; equals n on the l2_weighted model
    double z_norm = 0.0;    // ||z_n||, strictly decreasing
    double inv_norm = 0.0;  // ||F^{-1}(z_n)||, strictly increasing
    double gamma_ref = 0.0; // independent implicit-equation root at nu
    double sqrt_nu = 0.0;
    bool satisfied = false; // inv_norm >= sqrt(nu)
};

struct WitnessReport {
    std::string model_id;
    std::string gauge_id;
    double s = 2.0;
    std::vector<GammaRecord> gamma_table;
    std::vector<DivergenceRow> divergence;
    double max_gamma_residual = 0.0;
    double max_path_mismatch = 0.0; // rel. gap between inv_norm and gamma_ref
    bool all_satisfied = false;
};

/**
 * Builds unit vectors y_n with shrinking weak norm, z_n = |||y_n||| * y_n,
 * and certifies ||z_n|| -> 0 while ||F^{-1}(z_n)|| grows like gamma_n.
 * On l2_weighted, y_n = e_{n^2} has weak norm exactly 1/n. Sup-norm models
 * use y_n = e_n; lp_seq models use flat unit vectors of growing support.
 * Grid models are finite-dimensional and unsupported (config_error).
 */
WitnessReport divergence_report(const MapSpec& map, const std::vector<std::uint64_t>& n_list);

struct WeakSepWitness {
    SparseVector x_q;       // e_{q+1}, annihilated by l_1..l_q
    double weak_norm = 0.0; // |||x_q|||
    double bound = 0.0;     // ||x_q|| / 2^{q/2}; weak_norm <= bound always
};

// Requires the coordinate family.
WeakSepWitness weaksep_witness(const FunctionalFamily& family, int q);

/**
 * Exact split  ||x+h||_5^5 - ||x||_5^5 = main + A + B  with
 *   main = sum 5 |x_k| x_k^3 h_k,
 *   A    = sum of int_0^1 5 |x_k| [ (x_k+t h_k)^3 - x_k^3 ] h_k dt,
 *   B    = sum of int_0^1 5 [ |x_k+t h_k| - |x_k| ] (x_k+t h_k)^3 h_k dt,
 * the t-integrals evaluated in closed form (polynomial pieces split at the
 * sign change of x_k + t h_k). Bounds:
 *   |A| <= 5 [ 3||x||^3||h||^2 + 3||x||^2||h||^3 + ||x|| ||h||^4 ]   (5-norms)
 *   |B| <= 5 (||x|| + ||h||)^3 ||h||^2.
 */
struct RemainderSplit {
    double main_term = 0.0;
    double A = 0.0;
    double B = 0.0;
    double bound_A = 0.0;
    double bound_B = 0.0;
    double total = 0.0; // ||x+h||_5^5 - ||x||_5^5, summed coordinatewise
};

RemainderSplit remainder_bounds_q5(const SparseVector& x, const SparseVector& h);

} // namespace nonopen
