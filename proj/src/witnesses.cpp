#include "nonopen/witnesses.hpp"

#include <cmath>

#include "nonopen/scalar.hpp"

namespace nonopen {

double solve_gamma(double s, double nu) {
    if (!(s > 0.0)) throw parameter_error("gamma equation requires s > 0");
    if (!(nu >= 1.0)) throw parameter_error("gamma equation requires nu >= 1");
    const double log_nu = std::log(nu);
    // psi(g) = ln nu + ln g - exp(s (ln nu - ln g)), strictly increasing
    const auto psi = [&](double g) {
        return log_nu + std::log(g) - std::exp(s * (log_nu - std::log(g)));
    };
    double lo = 1e-8;
    double hi = std::max(1.0, std::sqrt(nu));
    while (psi(hi) <= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi)) throw numerical_range_error("gamma exceeds binary64 range");
    }
    for (int i = 0; i < 200 && (hi - lo) > 1e-14 * hi; ++i) {
        const double mid = lo + 0.5 * (hi - lo);
        (psi(mid) > 0.0 ? hi : lo) = mid;
    }
    return lo + 0.5 * (hi - lo);
}

std::vector<GammaRecord> gamma_sequence(double s, const std::vector<std::uint64_t>& n_list) {
    std::vector<GammaRecord> out;
    out.reserve(n_list.size());
    for (std::uint64_t n : n_list) {
        if (n == 0) throw parameter_error("gamma sequence requires positive n");
        const double nu = static_cast<double>(n);
        GammaRecord rec;
        rec.n = n;
        rec.s = s;
        rec.gamma = solve_gamma(s, nu);
        rec.sqrt_n = std::sqrt(nu);
        rec.satisfied = rec.gamma >= rec.sqrt_n;
        rec.residual = std::abs(std::log(nu) + std::log(rec.gamma) -
                                std::exp(s * (std::log(nu) - std::log(rec.gamma))));
        out.push_back(rec);
    }
    return out;
}

NoPreimageCertificate certify_no_preimage(const MapSpec& map, double delta, const Vector& y) {
    if (!(delta > 0.0) || !(delta < 1.0)) throw parameter_error("delta must lie in (0,1)");
    const double ny = strong_norm(map.model, y);
    if (std::abs(ny - 1.0) > 1e-12) throw parameter_error("y must have unit strong norm");
    NoPreimageCertificate cert;
    cert.delta = delta;
    cert.s = static_cast<double>(map.gauge.degree());
    cert.threshold = std::pow(1.0 / std::log(2.0 / delta), 1.0 / cert.s);
    cert.weak_norm_y = weak_norm(map.gauge, map.model, y);
    cert.certified = cert.weak_norm_y < cert.threshold;
    return cert;
}

namespace {

std::vector<Vector> classification_probes(const MapSpec& map, const Vector& x) {
    std::vector<Vector> probes;
    if (map.model.kind == ModelKind::LpGrid) {
        const int m = map.model.cells;
        probes.emplace_back(GridFunction::cell_indicator(m, 0));
        if (m > 2) probes.emplace_back(GridFunction::cell_indicator(m, m / 2));
        if (m > 1) probes.emplace_back(GridFunction::cell_indicator(m, m - 1));
        return probes;
    }
    const auto& xs = as_sparse(x);
    std::vector<std::uint64_t> idx{1};
    if (xs.max_index() > 1) idx.push_back(xs.max_index());
    idx.push_back(xs.max_index() + 1);
    for (std::uint64_t k : idx) probes.emplace_back(SparseVector::unit(k));
    return probes;
}

} // namespace

Classification classify_point(const MapSpec& map, const Vector& x) {
    if (is_zero(x)) return {PointClass::Critical, 0.0, false};
    Classification result;
    result.cls = PointClass::Regular;
    for (const Vector& probe : classification_probes(map, x)) {
        const SolveResult sol = jf_solve(map, x, probe);
        const double rel = sol.residual / (1.0 + strong_norm(map.model, probe));
        result.max_residual = std::max(result.max_residual, rel);
        result.log_scale_used = result.log_scale_used || sol.log_scale != 0.0;
    }
    return result;
}

namespace {

// Unit vector y_n with shrinking weak norm, per model.
Vector divergence_unit(const MapSpec& map, std::uint64_t n) {
    switch (map.model.kind) {
        case ModelKind::L2Weighted:
            return SparseVector::unit(n * n); // weak norm exactly 1/n
        case ModelKind::LInfDyadic:
        case ModelKind::C0Dyadic:
        case ModelKind::WeakSep:
            return SparseVector::unit(n);
        case ModelKind::LpSeq: {
            // flat unit vector on the first n coordinates
            const double v = std::pow(static_cast<double>(n), -1.0 / map.model.p);
            std::vector<SparseEntry> entries;
            entries.reserve(n);
            for (std::uint64_t k = 1; k <= n; ++k) entries.push_back({k, v});
            return SparseVector::from_entries(std::move(entries));
        }
        case ModelKind::LpGrid:
            throw config_error("grid models are finite-dimensional; no divergence sequence");
    }
    throw config_error("unknown model kind");
}

} // namespace

WitnessReport divergence_report(const MapSpec& map, const std::vector<std::uint64_t>& n_list) {
    if (n_list.empty()) throw parameter_error("empty n range");
    WitnessReport report;
    report.model_id = map.model.id();
    report.gauge_id = map.gauge.id();
    report.s = static_cast<double>(map.gauge.degree());
    report.gamma_table = gamma_sequence(report.s, n_list);
    report.all_satisfied = true;
    for (const auto& rec : report.gamma_table) {
        report.max_gamma_residual = std::max(report.max_gamma_residual, rec.residual);
        report.all_satisfied = report.all_satisfied && rec.satisfied;
    }
    report.divergence.reserve(n_list.size());
    for (std::uint64_t n : n_list) {
        const Vector y = divergence_unit(map, n);
        const double wk = weak_norm(map.gauge, map.model, y);
        const Vector z = scale(wk, y);
        DivergenceRow row;
        row.n = n;
        row.nu = 1.0 / wk;
        row.z_norm = strong_norm(map.model, z);
        row.inv_norm = strong_norm(map.model, f_invert_radial(map, z));
        row.gamma_ref = solve_gamma(report.s, row.nu);
        row.sqrt_nu = std::sqrt(row.nu);
        row.satisfied = row.inv_norm >= row.sqrt_nu;
        report.max_path_mismatch = std::max(
            report.max_path_mismatch, std::abs(row.inv_norm - row.gamma_ref) / row.gamma_ref);
        report.all_satisfied = report.all_satisfied && row.satisfied;
        report.divergence.push_back(row);
    }
    return report;
}

WeakSepWitness weaksep_witness(const FunctionalFamily& family, int q) {
    if (q < 1) throw parameter_error("witness index q must be positive");
    if (family.kind() != FamilyKind::Coordinate)
        throw parameter_error("witness construction requires the coordinate family");
    WeakSepWitness w;
    w.x_q = SparseVector::unit(static_cast<std::uint64_t>(q) + 1);
    const SpaceModel model = SpaceModel::weak_sep(family.kind());
    w.weak_norm = weak_norm(GaugeSpec::weaksep(family.kind()), model, Vector(w.x_q));
    w.bound = strong_norm(model, Vector(w.x_q)) * std::exp2(-0.5 * static_cast<double>(q));
    return w;
}

namespace {

// int_{t1}^{t2} 5 (|u| - |a|) u^3 b dt with u = a + t b of constant sign s
// on the piece: antiderivative s u^5 - (5|a|/4) u^4.
double b_piece(double a, double b, double t1, double t2, double sgn) {
    const double u1 = a + t1 * b;
    const double u2 = a + t2 * b;
    return sgn * (pow_int(u2, 5) - pow_int(u1, 5)) -
           1.25 * std::abs(a) * (pow_int(u2, 4) - pow_int(u1, 4));
}

} // namespace

RemainderSplit remainder_bounds_q5(const SparseVector& x, const SparseVector& h) {
    RemainderSplit split;
    SparseVector::for_each_union(x, h, [&](std::uint64_t, double a, double b) {
        split.total += pow_int(std::abs(a + b), 5) - pow_int(std::abs(a), 5);
        split.main_term += 5.0 * std::abs(a) * pow_int(a, 3) * b;
        if (b == 0.0) return;
        split.A += 5.0 * std::abs(a) * (1.5 * a * a * b * b + a * b * b * b + 0.25 * pow_int(b, 4));
        const double t0 = -a / b; // sign change of a + t b
        if (t0 > 0.0 && t0 < 1.0) {
            const double s1 = a != 0.0 ? std::copysign(1.0, a) : std::copysign(1.0, b);
            const double s2 = std::copysign(1.0, a + b);
            split.B += b_piece(a, b, 0.0, t0, s1) + b_piece(a, b, t0, 1.0, s2);
        } else {
            const double mid = a + 0.5 * b;
            const double s = mid != 0.0 ? std::copysign(1.0, mid) : 1.0;
            split.B += b_piece(a, b, 0.0, 1.0, s);
        }
    });
    const double na = lp_seq_norm(x, 5.0);
    const double nb = lp_seq_norm(h, 5.0);
    split.bound_A = 5.0 * (3.0 * pow_int(na, 3) * nb * nb + 3.0 * na * na * pow_int(nb, 3) +
                           na * pow_int(nb, 4));
    split.bound_B = 5.0 * pow_int(na + nb, 3) * nb * nb;
    return split;
}

} // namespace nonopen
