#pragma once

#include <string>

#include "nonopen/functional_family.hpp"
#include "nonopen/vector.hpp"

namespace nonopen {

enum class ModelKind {
    L2Weighted, // l2, root-sum-squares norm
    LpSeq,      // lp sequences, 1 <= p < inf
    LInfDyadic, // bounded sequences, sup norm
    C0Dyadic,   // null sequences, sup norm
    LpGrid,     // Lp([0,1], Lebesgue probability), M-cell representatives
    WeakSep,    // sup-norm sequences with an attached separating family
};

/**
 * A named Banach-space model: the strong norm, the vector representation it
 * expects, and the constant C with weak_norm <= C * strong_norm. Every
 * built-in model has C = 1.
 */
struct SpaceModel {
    ModelKind kind = ModelKind::L2Weighted;
    double p = 2.0;                                   // LpSeq / LpGrid exponent
    int cells = 0;                                    // LpGrid
    FunctionalFamily family{FamilyKind::Coordinate};  // WeakSep
    double comparison_constant = 1.0;

    static SpaceModel l2_weighted();
    static SpaceModel lp_seq(double p);
    static SpaceModel linf_dyadic();
    static SpaceModel c0_dyadic();
    static SpaceModel lp_grid(double p, int cells);
    static SpaceModel weak_sep(FamilyKind family);

    bool is_sequence_model() const { return kind != ModelKind::LpGrid; }
    std::string id() const;
};

// The model's strong norm; exact on finite support, no truncation error.
double strong_norm(const SpaceModel& model, const Vector& x);

// (sum |x_k|^p)^(1/p) on sparse vectors
double lp_seq_norm(const SparseVector& x, double p);

// ((1/M) sum |v_i|^p)^(1/p) on grid functions
double lp_grid_norm(const GridFunction& f, double p);

struct NormComparison {
    double lhs;  // the provably smaller norm
    double rhs;  // the provably larger norm
    bool holds;  // lhs <= rhs up to 1e-12 slack
};

// Sequence models check ||x||_{p2} <= ||x||_{p1}; the probability-measure
// grid checks ||f||_{p1} <= ||f||_{p2}. Requires 1 <= p1 < p2.
NormComparison norm_comparison_check(const SpaceModel& model, double p1, double p2,
                                     const Vector& x);

} // namespace nonopen
