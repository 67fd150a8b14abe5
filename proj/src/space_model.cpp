#include "nonopen/space_model.hpp"

#include <cmath>

#include "nonopen/scalar.hpp"

namespace nonopen {

SpaceModel SpaceModel::l2_weighted() { return {ModelKind::L2Weighted}; }

SpaceModel SpaceModel::lp_seq(double p) {
    if (!(p >= 1.0) || std::isinf(p)) throw config_error("lp_seq requires p in [1, inf)");
    SpaceModel m{ModelKind::LpSeq};
    m.p = p;
    return m;
}

SpaceModel SpaceModel::linf_dyadic() { return {ModelKind::LInfDyadic}; }

SpaceModel SpaceModel::c0_dyadic() { return {ModelKind::C0Dyadic}; }

SpaceModel SpaceModel::lp_grid(double p, int cells) {
    if (!(p >= 1.0) || std::isinf(p)) throw config_error("lp_grid requires p in [1, inf)");
    if (cells < 1) throw config_error("lp_grid requires at least one cell");
    SpaceModel m{ModelKind::LpGrid};
    m.p = p;
    m.cells = cells;
    return m;
}

SpaceModel SpaceModel::weak_sep(FamilyKind family) {
    SpaceModel m{ModelKind::WeakSep};
    m.family = FunctionalFamily(family);
    return m;
}

std::string SpaceModel::id() const {
    switch (kind) {
        case ModelKind::L2Weighted: return "l2_weighted";
        case ModelKind::LpSeq: return "lp_seq(p=" + std::to_string(p) + ")";
        case ModelKind::LInfDyadic: return "linf_dyadic";
        case ModelKind::C0Dyadic: return "c0_dyadic";
        case ModelKind::LpGrid:
            return "lp_grid(p=" + std::to_string(p) + ",M=" + std::to_string(cells) + ")";
        case ModelKind::WeakSep: return "weaksep(" + family.id() + ")";
    }
    return "unknown";
}

double lp_seq_norm(const SparseVector& x, double p) {
    double sum = 0.0;
    for (const auto& e : x.entries()) sum += pow_abs(e.value, p);
    if (p == 1.0) return sum;
    if (p == 2.0) return std::sqrt(sum);
    return std::pow(sum, 1.0 / p);
}

double lp_grid_norm(const GridFunction& f, double p) {
    double sum = 0.0;
    for (double v : f.values()) sum += pow_abs(v, p);
    sum /= static_cast<double>(f.cells());
    if (p == 1.0) return sum;
    if (p == 2.0) return std::sqrt(sum);
    return std::pow(sum, 1.0 / p);
}

static double sup_norm(const SparseVector& x) {
    double m = 0.0;
    for (const auto& e : x.entries()) m = std::max(m, std::abs(e.value));
    return m;
}

double strong_norm(const SpaceModel& model, const Vector& x) {
    switch (model.kind) {
        case ModelKind::L2Weighted: return lp_seq_norm(as_sparse(x), 2.0);
        case ModelKind::LpSeq: return lp_seq_norm(as_sparse(x), model.p);
        case ModelKind::LInfDyadic:
        case ModelKind::C0Dyadic:
        case ModelKind::WeakSep: return sup_norm(as_sparse(x));
        case ModelKind::LpGrid: {
            const auto& f = as_grid(x);
            if (f.cells() != model.cells)
                throw representation_error("grid cell count does not match the model");
            return lp_grid_norm(f, model.p);
        }
    }
    throw representation_error("unknown model kind");
}

NormComparison norm_comparison_check(const SpaceModel& model, double p1, double p2,
                                     const Vector& x) {
    if (!(p1 >= 1.0) || !(p1 < p2)) throw parameter_error("requires 1 <= p1 < p2");
    NormComparison out{};
    if (model.kind == ModelKind::LpGrid) {
        const auto& f = as_grid(x);
        out.lhs = lp_grid_norm(f, p1);
        out.rhs = lp_grid_norm(f, p2);
    } else {
        const auto& s = as_sparse(x);
        out.lhs = lp_seq_norm(s, p2);
        out.rhs = lp_seq_norm(s, p1);
    }
    out.holds = out.lhs <= out.rhs + 1e-12 * (1.0 + out.rhs);
    return out;
}

} // namespace nonopen
