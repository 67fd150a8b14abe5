#include "nonopen/gauge.hpp"

#include <algorithm>
#include <cmath>

#include "nonopen/sampling.hpp"
#include "nonopen/scalar.hpp"

namespace nonopen {

GaugeSpec GaugeSpec::weighted_l2(int power) { return {GaugeKind::WeightedL2, 0, power}; }
GaugeSpec GaugeSpec::dyadic(int power) { return {GaugeKind::Dyadic, 0, power}; }
GaugeSpec GaugeSpec::lq_even(int q, int power) { return {GaugeKind::LqEven, q, power}; }
GaugeSpec GaugeSpec::l5_odd(int power) { return {GaugeKind::L5Odd, 0, power}; }
GaugeSpec GaugeSpec::grid_square(int power) { return {GaugeKind::GridSquare, 0, power}; }
GaugeSpec GaugeSpec::weaksep(FamilyKind family, int power) {
    GaugeSpec g{GaugeKind::WeakSepDyadic, 0, power};
    g.family = FunctionalFamily(family);
    return g;
}

int GaugeSpec::base_degree() const {
    switch (kind) {
        case GaugeKind::LqEven: return q;
        case GaugeKind::L5Odd: return 5;
        default: return 2;
    }
}

std::string GaugeSpec::id() const {
    std::string base;
    switch (kind) {
        case GaugeKind::WeightedL2: base = "weighted_l2"; break;
        case GaugeKind::Dyadic: base = "dyadic"; break;
        case GaugeKind::LqEven: base = "lq_even(q=" + std::to_string(q) + ")"; break;
        case GaugeKind::L5Odd: base = "l5_odd"; break;
        case GaugeKind::GridSquare: base = "grid_square"; break;
        case GaugeKind::WeakSepDyadic: base = "weaksep(" + family.id() + ")"; break;
    }
    if (power != 1) base += "^" + std::to_string(power);
    return base;
}

void check_compatible(const GaugeSpec& gauge, const SpaceModel& model) {
    if (gauge.power < 1) throw config_error("gauge power must be a positive integer");
    switch (gauge.kind) {
        case GaugeKind::WeightedL2:
            if (model.kind != ModelKind::L2Weighted)
                throw config_error("weighted_l2 gauge requires the l2_weighted model");
            return;
        case GaugeKind::Dyadic:
            if (model.kind != ModelKind::LInfDyadic && model.kind != ModelKind::C0Dyadic)
                throw config_error("dyadic gauge requires a sup-norm sequence model");
            return;
        case GaugeKind::LqEven:
            if (model.kind != ModelKind::LpSeq)
                throw config_error("lq_even gauge requires an lp_seq model");
            if (gauge.q < 2 || gauge.q % 2 != 0)
                throw config_error("lq_even gauge requires an even integer q >= 2");
            if (static_cast<double>(gauge.q) < model.p)
                throw config_error("lq_even gauge requires q >= p");
            return;
        case GaugeKind::L5Odd:
            if (model.kind != ModelKind::LpSeq)
                throw config_error("l5_odd gauge requires an lp_seq model");
            if (model.p > 5.0) throw config_error("l5_odd gauge requires p <= 5");
            return;
        case GaugeKind::GridSquare:
            if (model.kind != ModelKind::LpGrid)
                throw config_error("grid_square gauge requires an lp_grid model");
            if (model.p < 2.0) throw config_error("grid_square gauge requires p >= 2");
            return;
        case GaugeKind::WeakSepDyadic:
            if (model.kind != ModelKind::WeakSep)
                throw config_error("weaksep gauge requires the weaksep model");
            if (gauge.family.kind() != model.family.kind())
                throw config_error("gauge and model functional families differ");
            return;
    }
    throw config_error("unknown gauge kind");
}

namespace {

double base_eval(const GaugeSpec& g, const SpaceModel& model, const Vector& x) {
    switch (g.kind) {
        case GaugeKind::WeightedL2: {
            double sum = 0.0;
            for (const auto& e : as_sparse(x).entries())
                sum += e.value * e.value / static_cast<double>(e.index);
            return sum;
        }
        case GaugeKind::Dyadic: {
            double sum = 0.0;
            for (const auto& e : as_sparse(x).entries())
                sum += e.value * e.value * dyadic_weight(e.index);
            return sum;
        }
        case GaugeKind::LqEven: {
            double sum = 0.0;
            for (const auto& e : as_sparse(x).entries()) sum += pow_int(e.value, g.q);
            return sum;
        }
        case GaugeKind::L5Odd: {
            double sum = 0.0;
            for (const auto& e : as_sparse(x).entries()) sum += pow_int(std::abs(e.value), 5);
            return sum;
        }
        case GaugeKind::GridSquare: {
            const auto& f = as_grid(x);
            if (f.cells() != model.cells)
                throw representation_error("grid cell count does not match the model");
            double sum = 0.0;
            for (double v : f.values()) sum += v * v;
            return sum / static_cast<double>(f.cells());
        }
        case GaugeKind::WeakSepDyadic: {
            // truncated at the largest k that can be nonzero for x's support;
            // exact because every later term vanishes
            const auto& xs = as_sparse(x);
            double sum = 0.0;
            for (std::uint64_t k : g.family.candidate_indices(xs)) {
                const double lk = g.family.apply(k, xs);
                sum += lk * lk * dyadic_weight(k);
            }
            return sum;
        }
    }
    throw config_error("unknown gauge kind");
}

double base_grad(const GaugeSpec& g, const SpaceModel& model, const Vector& x, const Vector& h) {
    switch (g.kind) {
        case GaugeKind::WeightedL2: {
            double sum = 0.0;
            SparseVector::for_each_union(as_sparse(x), as_sparse(h),
                                         [&](std::uint64_t k, double xv, double hv) {
                                             sum += 2.0 * (xv * hv) / static_cast<double>(k);
                                         });
            return sum;
        }
        case GaugeKind::Dyadic: {
            double sum = 0.0;
            SparseVector::for_each_union(as_sparse(x), as_sparse(h),
                                         [&](std::uint64_t k, double xv, double hv) {
                                             sum += 2.0 * (xv * hv) * dyadic_weight(k);
                                         });
            return sum;
        }
        case GaugeKind::LqEven: {
            double sum = 0.0;
            SparseVector::for_each_union(as_sparse(x), as_sparse(h),
                                         [&](std::uint64_t, double xv, double hv) {
                                             sum += pow_int(xv, g.q - 1) * hv;
                                         });
            return static_cast<double>(g.q) * sum;
        }
        case GaugeKind::L5Odd: {
            // d|t|^5/dt = 5 |t| t^3
            double sum = 0.0;
            SparseVector::for_each_union(as_sparse(x), as_sparse(h),
                                         [&](std::uint64_t, double xv, double hv) {
                                             sum += 5.0 * std::abs(xv) * pow_int(xv, 3) * hv;
                                         });
            return sum;
        }
        case GaugeKind::GridSquare: {
            const auto& f = as_grid(x);
            const auto& d = as_grid(h);
            if (f.cells() != model.cells || d.cells() != model.cells)
                throw representation_error("grid cell count does not match the model");
            double sum = 0.0;
            for (int i = 0; i < f.cells(); ++i) {
                const std::size_t j = static_cast<std::size_t>(i);
                sum += 2.0 * (f.values()[j] * d.values()[j]);
            }
            return sum / static_cast<double>(f.cells());
        }
        case GaugeKind::WeakSepDyadic: {
            const auto& xs = as_sparse(x);
            const auto& hs = as_sparse(h);
            auto kx = g.family.candidate_indices(xs);
            auto kh = g.family.candidate_indices(hs);
            std::vector<std::uint64_t> ks;
            std::set_intersection(kx.begin(), kx.end(), kh.begin(), kh.end(),
                                  std::back_inserter(ks));
            double sum = 0.0;
            for (std::uint64_t k : ks)
                sum += 2.0 * (g.family.apply(k, xs) * g.family.apply(k, hs)) * dyadic_weight(k);
            return sum;
        }
    }
    throw config_error("unknown gauge kind");
}

// Operator norm bound for the base-gauge derivative at x, in the model norm.
double base_grad_opnorm_bound(const GaugeSpec& g, const SpaceModel& model, const Vector& x) {
    switch (g.kind) {
        case GaugeKind::WeightedL2: return 2.0 * strong_norm(model, x);
        case GaugeKind::Dyadic:
        case GaugeKind::WeakSepDyadic: return 2.0 * strong_norm(model, x);
        case GaugeKind::LqEven:
            return static_cast<double>(g.q) * pow_int(strong_norm(model, x), g.q - 1);
        case GaugeKind::L5Odd: return 5.0 * pow_int(lp_seq_norm(as_sparse(x), 5.0), 4);
        case GaugeKind::GridSquare: return 2.0 * strong_norm(model, x);
    }
    throw config_error("unknown gauge kind");
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

double base_lipschitz_bound(const GaugeSpec& g, const SpaceModel& model, const Vector& x,
                            const Vector& z) {
    switch (g.kind) {
        case GaugeKind::WeightedL2:
        case GaugeKind::Dyadic:
        case GaugeKind::WeakSepDyadic: return 2.0 * strong_norm(model, z);
        case GaugeKind::GridSquare: return 2.0 * strong_norm(model, z);
        case GaugeKind::LqEven: {
            const double nx = strong_norm(model, x);
            const double nz = strong_norm(model, z);
            double bound = pow_int(nz, g.q - 1);
            for (int i = 1; i <= g.q - 2; ++i)
                bound += binomial(g.q - 1, i) * pow_int(nz, i) * pow_int(nx, g.q - 1 - i);
            return static_cast<double>(g.q) * bound;
        }
        case GaugeKind::L5Odd: {
            const double nx = lp_seq_norm(as_sparse(x), 5.0);
            const double nz = lp_seq_norm(as_sparse(z), 5.0);
            const double ny = lp_seq_norm(as_sparse(add(x, z)), 5.0);
            return 5.0 * nz * pow_int(nx, 3) + 5.0 * nz * (nx * nx + nx * ny + ny * ny) * ny;
        }
    }
    throw config_error("unknown gauge kind");
}

// Probe directions with unit strong norm: coordinate directions across the
// union of supports (one index past it for the dual-evaluation family) plus
// 32 seeded random unit vectors on the same support.
std::vector<Vector> probe_directions(const GaugeSpec& g, const SpaceModel& model, const Vector& x,
                                     const Vector& z) {
    std::vector<Vector> probes;
    Sampler sampler(0x9e3779b97f4a7c15ull);
    if (model.kind == ModelKind::LpGrid) {
        const int m = model.cells;
        const double unit = std::pow(static_cast<double>(m), 1.0 / model.p);
        for (int i = 0; i < m; ++i)
            probes.emplace_back(GridFunction::cell_indicator(m, i, unit));
        for (int r = 0; r < 32; ++r) {
            GridFunction f = sampler.grid(m);
            const double n = lp_grid_norm(f, model.p);
            if (n > 0.0) probes.emplace_back(f.scaled(1.0 / n));
        }
        return probes;
    }
    std::vector<std::uint64_t> idx;
    for (const auto& e : as_sparse(x).entries()) idx.push_back(e.index);
    for (const auto& e : as_sparse(z).entries()) idx.push_back(e.index);
    if (idx.empty()) idx.push_back(1);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (g.kind == GaugeKind::WeakSepDyadic) idx.push_back(idx.back() + 1);
    for (std::uint64_t k : idx) probes.emplace_back(SparseVector::unit(k));
    for (int r = 0; r < 32; ++r) {
        std::vector<SparseEntry> entries;
        for (std::uint64_t k : idx) entries.push_back({k, sampler.normal()});
        SparseVector v = SparseVector::from_entries(std::move(entries));
        const double n = strong_norm(model, Vector(v));
        if (n > 0.0) probes.emplace_back(v.scaled(1.0 / n));
    }
    return probes;
}

} // namespace

double gauge_eval(const GaugeSpec& gauge, const SpaceModel& model, const Vector& x) {
    check_compatible(gauge, model);
    const double g = base_eval(gauge, model, x);
    return gauge.power == 1 ? g : pow_int(g, gauge.power);
}

double gauge_grad_apply(const GaugeSpec& gauge, const SpaceModel& model, const Vector& x,
                        const Vector& h) {
    check_compatible(gauge, model);
    const double j = base_grad(gauge, model, x, h);
    if (gauge.power == 1) return j;
    const double g = base_eval(gauge, model, x);
    return static_cast<double>(gauge.power) * pow_int(g, gauge.power - 1) * j;
}

double weak_norm(const GaugeSpec& gauge, const SpaceModel& model, const Vector& x) {
    const double g = gauge_eval(gauge, model, x);
    const int d = gauge.degree();
    if (d == 2) return std::sqrt(g);
    return std::pow(g, 1.0 / static_cast<double>(d));
}

LipschitzBound gauge_grad_lipschitz_bound(const GaugeSpec& gauge, const SpaceModel& model,
                                          const Vector& x, const Vector& z) {
    check_compatible(gauge, model);
    const Vector y = add(x, z);
    double estimate = 0.0;
    for (const Vector& h : probe_directions(gauge, model, x, z)) {
        const double d =
            std::abs(gauge_grad_apply(gauge, model, y, h) - gauge_grad_apply(gauge, model, x, h));
        estimate = std::max(estimate, d);
    }
    double bound = base_lipschitz_bound(gauge, model, x, z);
    if (gauge.power > 1) {
        const int m = gauge.power;
        const double gx = base_eval(gauge, model, x);
        const double gy = base_eval(gauge, model, y);
        const double gmax = std::max(gx, gy);
        bound = static_cast<double>(m) * pow_int(gmax, m - 1) * bound +
                static_cast<double>(m) * std::abs(pow_int(gy, m - 1) - pow_int(gx, m - 1)) *
                    base_grad_opnorm_bound(gauge, model, x);
    }
    return {estimate, bound};
}

bool family_separation_check(const FunctionalFamily& family, const SparseVector& x) {
    return family.separation_check(x);
}

} // namespace nonopen
