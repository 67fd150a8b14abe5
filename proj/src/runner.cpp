#include "nonopen/runner.hpp"

#include <algorithm>
#include <cmath>

#include "nonopen/scalar.hpp"

namespace nonopen {

namespace {

constexpr double kWindowLo = 50.0;   // second-order convergence window
constexpr double kWindowHi = 200.0;
// Coarse errors below this are exact hits (quadratic gauges, decoupled
// directions); checking a ratio there would divide roundoff by roundoff.
constexpr double kWindowFloor = 1e-8;

SpaceModel model_from_id(const RunConfig& cfg, const std::string& id) {
    const double seq_p = cfg.p > 0.0 ? cfg.p : 2.0;
    const double grid_p = cfg.p > 0.0 ? cfg.p : 4.0;
    if (id == "l2_weighted") return SpaceModel::l2_weighted();
    if (id == "lp_seq") return SpaceModel::lp_seq(seq_p);
    if (id == "linf_dyadic") return SpaceModel::linf_dyadic();
    if (id == "c0_dyadic") return SpaceModel::c0_dyadic();
    if (id == "lp_grid") return SpaceModel::lp_grid(grid_p, cfg.cells);
    if (id == "weaksep") return SpaceModel::weak_sep(FunctionalFamily::from_id(cfg.family).kind());
    throw config_error("unknown model: " + id);
}

GaugeSpec gauge_from_id(const RunConfig& cfg, const std::string& id) {
    if (id == "weighted_l2") return GaugeSpec::weighted_l2(cfg.power);
    if (id == "dyadic") return GaugeSpec::dyadic(cfg.power);
    if (id == "lq_even") return GaugeSpec::lq_even(cfg.q, cfg.power);
    if (id == "l5_odd") return GaugeSpec::l5_odd(cfg.power);
    if (id == "grid_square") return GaugeSpec::grid_square(cfg.power);
    if (id == "weaksep")
        return GaugeSpec::weaksep(FunctionalFamily::from_id(cfg.family).kind(), cfg.power);
    throw config_error("unknown gauge: " + id);
}

std::string partner_gauge(const std::string& model_id) {
    if (model_id == "l2_weighted") return "weighted_l2";
    if (model_id == "lp_seq") return "lq_even";
    if (model_id == "linf_dyadic" || model_id == "c0_dyadic") return "dyadic";
    if (model_id == "lp_grid") return "grid_square";
    if (model_id == "weaksep") return "weaksep";
    throw config_error("unknown model: " + model_id);
}

std::string partner_model(const std::string& gauge_id) {
    if (gauge_id == "weighted_l2") return "l2_weighted";
    if (gauge_id == "lq_even" || gauge_id == "l5_odd") return "lp_seq";
    if (gauge_id == "dyadic") return "linf_dyadic";
    if (gauge_id == "grid_square") return "lp_grid";
    if (gauge_id == "weaksep") return "weaksep";
    throw config_error("unknown gauge: " + gauge_id);
}

std::string fmt(double v) { return json(v).dump(); }

} // namespace

RunConfig RunConfig::from_json(const json& j) {
    RunConfig cfg;
    if (!j.is_object()) throw config_error("config must be a JSON object");
    if (j.contains("model")) cfg.model = j.at("model").get<std::string>();
    if (j.contains("gauge")) cfg.gauge = j.at("gauge").get<std::string>();
    if (j.contains("p")) cfg.p = j.at("p").get<double>();
    if (j.contains("q")) cfg.q = j.at("q").get<int>();
    if (j.contains("power")) cfg.power = j.at("power").get<int>();
    if (j.contains("cells")) cfg.cells = j.at("cells").get<int>();
    if (j.contains("family")) cfg.family = j.at("family").get<std::string>();
    if (j.contains("s")) cfg.s = j.at("s").get<double>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
    if (j.contains("tol_fd")) cfg.tol_fd = j.at("tol_fd").get<double>();
    if (j.contains("tol_solve")) cfg.tol_solve = j.at("tol_solve").get<double>();
    return cfg;
}

json RunConfig::to_json() const {
    json j;
    j["model"] = model;
    j["gauge"] = gauge;
    j["p"] = p;
    j["q"] = q;
    j["power"] = power;
    j["cells"] = cells;
    j["family"] = family;
    j["s"] = s;
    j["seed"] = seed;
    j["samples"] = samples;
    j["tol_fd"] = tol_fd;
    j["tol_solve"] = tol_solve;
    return j;
}

MapSpec resolve_map(const RunConfig& cfg) {
    std::string model_id = cfg.model;
    std::string gauge_id = cfg.gauge;
    if (model_id.empty() && gauge_id.empty()) {
        model_id = "l2_weighted";
        gauge_id = "weighted_l2";
    } else if (model_id.empty()) {
        model_id = partner_model(gauge_id);
    } else if (gauge_id.empty()) {
        gauge_id = partner_gauge(model_id);
    }
    return MapSpec(model_from_id(cfg, model_id), gauge_from_id(cfg, gauge_id));
}

std::vector<MapSpec> canonical_pairs(const RunConfig& cfg) {
    if (!cfg.model.empty() || !cfg.gauge.empty()) return {resolve_map(cfg)};
    std::vector<MapSpec> pairs;
    pairs.emplace_back(SpaceModel::l2_weighted(), GaugeSpec::weighted_l2());
    pairs.emplace_back(SpaceModel::lp_seq(2.0), GaugeSpec::lq_even(4));
    pairs.emplace_back(SpaceModel::lp_seq(2.0), GaugeSpec::lq_even(6));
    pairs.emplace_back(SpaceModel::lp_seq(2.0), GaugeSpec::l5_odd());
    pairs.emplace_back(SpaceModel::linf_dyadic(), GaugeSpec::dyadic());
    pairs.emplace_back(SpaceModel::c0_dyadic(), GaugeSpec::dyadic());
    pairs.emplace_back(SpaceModel::lp_grid(4.0, cfg.cells), GaugeSpec::grid_square());
    pairs.emplace_back(SpaceModel::weak_sep(FamilyKind::Coordinate),
                       GaugeSpec::weaksep(FamilyKind::Coordinate));
    pairs.emplace_back(SpaceModel::weak_sep(FamilyKind::DualEval),
                       GaugeSpec::weaksep(FamilyKind::DualEval));
    return pairs;
}

namespace {

std::uint64_t fd_max_index(GaugeKind kind) {
    switch (kind) {
        case GaugeKind::WeightedL2: return 32;
        case GaugeKind::Dyadic:
        case GaugeKind::WeakSepDyadic: return 8;
        default: return 64;
    }
}

Vector raw_sample(Sampler& sampler, const MapSpec& map) {
    if (map.model.kind == ModelKind::LpGrid) return sampler.grid(map.model.cells);
    const std::size_t support = 1 + static_cast<std::size_t>(sampler.uniform_index(0, 7));
    return sampler.sparse(support, 1, fd_max_index(map.gauge.kind));
}

} // namespace

namespace {

// Rescale so the gauge value lands in the band where exp(-1/G) and its
// derivatives are O(1) and binary64 finite differences are informative.
Vector gauge_normalize(Sampler& sampler, const MapSpec& map, const Vector& v, double g,
                       double band_lo = 0.7, double band_hi = 1.3) {
    const double target = sampler.uniform(band_lo, band_hi);
    const double lambda = std::pow(target / g, 1.0 / static_cast<double>(map.gauge.degree()));
    return scale(lambda, v);
}

} // namespace

Vector sample_fd_point(Sampler& sampler, const MapSpec& map) {
    for (;;) {
        Vector v = raw_sample(sampler, map);
        const double g = gauge_eval(map.gauge, map.model, v);
        if (g <= 0.0 || !std::isfinite(g)) continue;
        return gauge_normalize(sampler, map, v, g);
    }
}

// Base point and direction on a shared support, so the rank-one coupling
// J_G(x)h is active and the finite-difference error is genuinely second
// order (decoupled directions degrade to order q for the power gauges).
std::pair<Vector, Vector> sample_fd_pair(Sampler& sampler, const MapSpec& map) {
    for (;;) {
        Vector x, h;
        if (map.model.kind == ModelKind::LpGrid) {
            GridFunction xf = sampler.grid(map.model.cells);
            // correlate the direction with the base point; independent cells
            // would cancel the coupling term ~1/sqrt(M) and starve the window
            GridFunction hf =
                GridFunction::axpy(0.9, xf, sampler.grid(map.model.cells).scaled(0.44));
            x = std::move(xf);
            h = std::move(hf);
        } else {
            const SparseVector support =
                sampler.sparse(1 + static_cast<std::size_t>(sampler.uniform_index(0, 7)), 1,
                               fd_max_index(map.gauge.kind));
            std::vector<SparseEntry> xe, he;
            for (const auto& e : support.entries()) {
                xe.push_back({e.index, sampler.normal()});
                he.push_back({e.index, sampler.normal()});
            }
            x = SparseVector::from_entries(std::move(xe));
            h = SparseVector::from_entries(std::move(he));
        }
        const double gx = gauge_eval(map.gauge, map.model, x);
        const double gh = gauge_eval(map.gauge, map.model, h);
        if (gx <= 0.0 || gh <= 0.0 || !std::isfinite(gx) || !std::isfinite(gh)) continue;
        // the grid gauge dilutes curvature by 1/M; a lower base band and a
        // longer direction keep the finite-difference signal above the
        // exactness floor
        if (map.model.kind == ModelKind::LpGrid)
            return {gauge_normalize(sampler, map, x, gx, 0.2, 0.3),
                    gauge_normalize(sampler, map, h, gh, 1.5, 2.5)};
        return {gauge_normalize(sampler, map, x, gx), gauge_normalize(sampler, map, h, gh)};
    }
}

Vector sample_strong_point(Sampler& sampler, const MapSpec& map, double lo, double hi) {
    for (;;) {
        Vector v = raw_sample(sampler, map);
        const double n = strong_norm(map.model, v);
        if (n <= 0.0 || !std::isfinite(n)) continue;
        return scale(sampler.uniform(lo, hi) / n, v);
    }
}

namespace {

// ---------------------------------------------------------------- gradcheck

struct WindowStats {
    int checked = 0;
    int exact = 0; // coarse error at the exactness floor; no ratio to take
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    bool in_window = true;

    void record(double err_coarse, double err_fine) {
        if (err_coarse <= kWindowFloor) {
            ++exact;
            return;
        }
        const double ratio = err_coarse / std::max(err_fine, 1e-300);
        if (checked == 0) {
            min_ratio = max_ratio = ratio;
        } else {
            min_ratio = std::min(min_ratio, ratio);
            max_ratio = std::max(max_ratio, ratio);
        }
        ++checked;
        in_window = in_window && ratio >= kWindowLo && ratio <= kWindowHi;
    }

    json to_json() const {
        json j;
        j["checked"] = checked;
        j["exact"] = exact;
        j["min_ratio"] = min_ratio;
        j["max_ratio"] = max_ratio;
        j["in_window"] = in_window;
        return j;
    }
};

struct FdSuite {
    double max_rel_err = 0.0;
    std::vector<double> rel_errs;
    WindowStats window;
    bool pass(double tol) const { return max_rel_err <= tol && window.in_window; }

    json to_json(double tol) const {
        json j;
        j["max_rel_err"] = max_rel_err;
        j["rel_errs"] = rel_errs;
        j["window"] = window.to_json();
        j["pass"] = pass(tol);
        return j;
    }
};

double gauge_fd(const MapSpec& map, const Vector& x, const Vector& h, double eps) {
    const double up = gauge_eval(map.gauge, map.model, axpy(eps, h, x));
    const double dn = gauge_eval(map.gauge, map.model, axpy(-eps, h, x));
    return (up - dn) / (2.0 * eps);
}

double map_fd_err(const MapSpec& map, const Vector& x, const Vector& h, const Vector& analytic,
                  double eps) {
    const Vector up = f_eval(map, axpy(eps, h, x));
    const Vector dn = f_eval(map, axpy(-eps, h, x));
    const Vector fd = scale(1.0 / (2.0 * eps), sub(up, dn));
    return strong_norm(map.model, sub(fd, analytic)) /
           (1.0 + strong_norm(map.model, analytic));
}

json gradcheck_pair(const MapSpec& map, std::uint64_t seed, int samples, double tol) {
    Sampler sampler(seed);
    FdSuite gauge_suite, map_suite;
    for (int i = 0; i < samples; ++i) {
        const auto [x, h] = sample_fd_pair(sampler, map);
        const double eps_scale = std::max(1.0, strong_norm(map.model, x));

        const double an_g = gauge_grad_apply(map.gauge, map.model, x, h);
        const double denom_g = 1.0 + std::abs(an_g);
        const auto gerr = [&](double eps) {
            return std::abs(gauge_fd(map, x, h, eps) - an_g) / denom_g;
        };
        const double g6 = gerr(1e-6 * eps_scale);
        gauge_suite.rel_errs.push_back(g6);
        gauge_suite.max_rel_err = std::max(gauge_suite.max_rel_err, g6);
        gauge_suite.window.record(gerr(1e-4 * eps_scale), gerr(1e-5 * eps_scale));

        const Vector an = jf_apply(map, x, h);
        const auto merr = [&](double eps) { return map_fd_err(map, x, h, an, eps); };
        const double m6 = merr(1e-6 * eps_scale);
        map_suite.rel_errs.push_back(m6);
        map_suite.max_rel_err = std::max(map_suite.max_rel_err, m6);
        map_suite.window.record(merr(1e-4 * eps_scale), merr(1e-5 * eps_scale));
    }
    json j;
    j["model"] = map.model.id();
    j["gauge"] = map.gauge.id();
    j["samples"] = samples;
    j["gauge_fd"] = gauge_suite.to_json(tol);
    j["map_fd"] = map_suite.to_json(tol);
    j["pass"] = gauge_suite.pass(tol) && map_suite.pass(tol);
    return j;
}

} // namespace

RunOutput run_gradcheck(const RunConfig& cfg) {
    RunOutput out;
    out.report["schema"] = "gradcheck/1";
    out.report["config"] = cfg.to_json();
    json pairs = json::array();
    bool pass = true;
    double max_err = 0.0;
    for (const MapSpec& map : canonical_pairs(cfg)) {
        json pj = gradcheck_pair(map, cfg.seed, cfg.samples, cfg.tol_fd);
        pass = pass && pj.at("pass").get<bool>();
        max_err = std::max({max_err, pj.at("gauge_fd").at("max_rel_err").get<double>(),
                            pj.at("map_fd").at("max_rel_err").get<double>()});
        pairs.push_back(std::move(pj));
    }
    out.report["pairs"] = std::move(pairs);
    out.report["max_rel_err"] = max_err;
    out.report["pass"] = pass;
    out.exit_code = pass ? 0 : 1;
    return out;
}

std::string witness_csv(const WitnessReport& report) {
    std::string csv = "n,gamma,sqrt_n,z_norm,inv_norm,satisfied\n";
    for (std::size_t i = 0; i < report.gamma_table.size(); ++i) {
        const auto& rec = report.gamma_table[i];
        const auto& row = report.divergence[i];
        csv += std::to_string(rec.n) + "," + fmt(rec.gamma) + "," + fmt(rec.sqrt_n) + "," +
               fmt(row.z_norm) + "," + fmt(row.inv_norm) + "," +
               (rec.satisfied && row.satisfied ? "true" : "false") + "\n";
    }
    return csv;
}

namespace {

json gamma_record_json(const GammaRecord& rec) {
    json j;
    j["n"] = rec.n;
    j["gamma"] = rec.gamma;
    j["sqrt_n"] = rec.sqrt_n;
    j["satisfied"] = rec.satisfied;
    j["residual"] = rec.residual;
    return j;
}

json divergence_row_json(const DivergenceRow& row) {
    json j;
    j["n"] = row.n;
    j["nu"] = row.nu;
    j["z_norm"] = row.z_norm;
    j["inv_norm"] = row.inv_norm;
    j["gamma_ref"] = row.gamma_ref;
    j["sqrt_nu"] = row.sqrt_nu;
    j["satisfied"] = row.satisfied;
    return j;
}

json witness_report_json(const WitnessReport& report) {
    json j;
    j["schema"] = "witness/1";
    j["model"] = report.model_id;
    j["gauge"] = report.gauge_id;
    j["s"] = report.s;
    json table = json::array();
    for (const auto& rec : report.gamma_table) table.push_back(gamma_record_json(rec));
    j["gamma_table"] = std::move(table);
    json rows = json::array();
    for (const auto& row : report.divergence) rows.push_back(divergence_row_json(row));
    j["divergence"] = std::move(rows);
    j["max_gamma_residual"] = report.max_gamma_residual;
    j["max_path_mismatch"] = report.max_path_mismatch;
    j["all_satisfied"] = report.all_satisfied;
    return j;
}

} // namespace

RunOutput run_nonopen(const RunConfig& cfg, std::uint64_t n_max) {
    if (n_max < 1) throw parameter_error("n_max must be at least 1");
    const MapSpec map = resolve_map(cfg);
    if (cfg.s != static_cast<double>(map.gauge.degree()))
        throw config_error("s must equal the gauge degree; adjust --power or --q");
    std::vector<std::uint64_t> ns(n_max);
    for (std::uint64_t i = 0; i < n_max; ++i) ns[i] = i + 1;
    const WitnessReport report = divergence_report(map, ns);
    RunOutput out;
    out.report = witness_report_json(report);
    out.report["config"] = cfg.to_json();
    out.csv = witness_csv(report);
    out.exit_code = report.all_satisfied ? 0 : 1;
    return out;
}

RunOutput run_models() {
    RunOutput out;
    out.report["schema"] = "models/1";
    json rows = json::array();
    const auto add = [&](const std::string& model, const std::string& gauge,
                         const std::string& note) {
        json j;
        j["model"] = model;
        j["gauge"] = gauge;
        j["notes"] = note;
        rows.push_back(std::move(j));
    };
    add("l2_weighted", "weighted_l2", "square-summable sequences; weak norm with weights 1/k");
    add("lp_seq(p)", "lq_even(q)",
        "p-summable sequences; gauge is the q-th power of the q-norm, q even, q >= p");
    add("lp_seq(p)", "l5_odd", "p-summable sequences, p <= 5; gauge sums |x_k|^5");
    add("linf_dyadic", "dyadic", "bounded sequences, sup norm; weak norm with weights 2^-k");
    add("c0_dyadic", "dyadic", "null sequences, sup norm; weak norm with weights 2^-k");
    add("lp_grid(p,M)", "grid_square",
        "piecewise-constant functions on [0,1], p >= 2; gauge integrates f^2");
    add("weaksep(coordinate)", "weaksep",
        "sup-norm sequences; separating coordinate functionals with dyadic weights");
    add("weaksep(dual_eval)", "weaksep",
        "sup-norm sequences; separating averaged-evaluation functionals with dyadic weights");
    out.report["rows"] = std::move(rows);
    return out;
}

RunOutput run_eval(const RunConfig& cfg, const Vector& x) {
    const MapSpec map = resolve_map(cfg);
    RunOutput out;
    out.report["schema"] = "eval/1";
    out.report["model"] = map.model.id();
    out.report["gauge"] = map.gauge.id();
    out.report["gauge_value"] = gauge_eval(map.gauge, map.model, x);
    out.report["value"] = vector_to_json(f_eval(map, x));
    return out;
}

RunOutput run_solve(const RunConfig& cfg, const Vector& x, const Vector& y) {
    const MapSpec map = resolve_map(cfg);
    const SolveResult sol = jf_solve(map, x, y);
    RunOutput out;
    out.report["schema"] = "solve/1";
    out.report["model"] = map.model.id();
    out.report["gauge"] = map.gauge.id();
    out.report["solution"] = vector_to_json(sol.solution);
    out.report["residual"] = sol.residual;
    out.report["log_scale"] = sol.log_scale;
    out.exit_code = sol.residual <= cfg.tol_solve * (1.0 + strong_norm(map.model, y)) ? 0 : 1;
    return out;
}

RunOutput run_invert(const RunConfig& cfg, const Vector& y) {
    const MapSpec map = resolve_map(cfg);
    const Vector x = f_invert_radial(map, y);
    const double roundtrip =
        strong_norm(map.model, sub(f_eval(map, x), y)) / (1.0 + strong_norm(map.model, y));
    RunOutput out;
    out.report["schema"] = "invert/1";
    out.report["model"] = map.model.id();
    out.report["gauge"] = map.gauge.id();
    out.report["preimage"] = vector_to_json(x);
    out.report["preimage_norm"] = strong_norm(map.model, x);
    out.report["roundtrip_rel_err"] = roundtrip;
    return out;
}

RunOutput run_certify(const RunConfig& cfg, double delta, const Vector& y) {
    const MapSpec map = resolve_map(cfg);
    const NoPreimageCertificate cert = certify_no_preimage(map, delta, y);
    RunOutput out;
    out.report["schema"] = "certificate/1";
    out.report["model"] = map.model.id();
    out.report["gauge"] = map.gauge.id();
    json cj;
    cj["delta"] = cert.delta;
    cj["s"] = cert.s;
    cj["threshold"] = cert.threshold;
    cj["weak_norm_y"] = cert.weak_norm_y;
    cj["certified"] = cert.certified;
    out.report["certificate"] = std::move(cj);
    json cross;
    cross["engaged"] = cert.certified;
    if (cert.certified) {
        const Vector x = f_invert_radial(map, scale(delta / 2.0, y));
        const double nx = strong_norm(map.model, x);
        cross["preimage_norm"] = nx;
        cross["outside_unit_ball"] = nx >= 1.0;
        out.exit_code = nx >= 1.0 ? 0 : 1;
    }
    out.report["cross_check"] = std::move(cross);
    return out;
}

// ------------------------------------------------------------- report suite

namespace {

json battery_lipschitz(const MapSpec& map, std::uint64_t seed, int samples, bool& pass) {
    Sampler sampler(seed);
    double worst_margin = 0.0; // max(estimate - bound)
    int ok = 0;
    for (int i = 0; i < samples; ++i) {
        const Vector x = sample_fd_point(sampler, map);
        Vector z = sample_fd_point(sampler, map);
        z = scale(std::exp(sampler.uniform(std::log(1e-3), std::log(3.0))), z);
        const LipschitzBound lb = gauge_grad_lipschitz_bound(map.gauge, map.model, x, z);
        worst_margin = std::max(worst_margin, lb.estimate - lb.bound);
        if (lb.estimate <= lb.bound + 1e-9) ++ok;
    }
    json j;
    j["samples"] = samples;
    j["ok"] = ok;
    j["worst_margin"] = worst_margin;
    const bool p = ok == samples;
    j["pass"] = p;
    pass = pass && p;
    return j;
}

json battery_solve(const MapSpec& map, std::uint64_t seed, int samples, double tol, bool& pass) {
    Sampler sampler(seed);
    double max_rel = 0.0;
    int ok = 0;
    for (int i = 0; i < samples; ++i) {
        const Vector x = sample_fd_point(sampler, map);
        const Vector y = sample_strong_point(sampler, map, 0.5, 2.0);
        const SolveResult sol = jf_solve(map, x, y);
        const double rel = sol.residual / (1.0 + strong_norm(map.model, y));
        max_rel = std::max(max_rel, rel);
        if (sol.log_scale == 0.0 && rel <= tol) ++ok;
    }
    json j;
    j["samples"] = samples;
    j["ok"] = ok;
    j["max_rel_residual"] = max_rel;
    const bool p = ok == samples;
    j["pass"] = p;
    pass = pass && p;
    return j;
}

Vector certify_unit(Sampler& sampler, const MapSpec& map) {
    switch (map.model.kind) {
        case ModelKind::L2Weighted:
            return SparseVector::unit(sampler.uniform_index(16, 1024));
        case ModelKind::LInfDyadic:
        case ModelKind::C0Dyadic:
        case ModelKind::WeakSep:
            return SparseVector::unit(sampler.uniform_index(8, 40));
        case ModelKind::LpSeq: {
            const std::uint64_t m = sampler.uniform_index(64, 256);
            const double v = std::pow(static_cast<double>(m), -1.0 / map.model.p);
            std::vector<SparseEntry> entries;
            for (std::uint64_t k = 1; k <= m; ++k) entries.push_back({k, v});
            return SparseVector::from_entries(std::move(entries));
        }
        case ModelKind::LpGrid: {
            const int cell = static_cast<int>(
                sampler.uniform_index(0, static_cast<std::uint64_t>(map.model.cells - 1)));
            const double v = std::pow(static_cast<double>(map.model.cells), 1.0 / map.model.p);
            return GridFunction::cell_indicator(map.model.cells, cell, v);
        }
    }
    throw config_error("unknown model kind");
}

json battery_certificates(const MapSpec& map, std::uint64_t seed, int samples, bool& pass) {
    Sampler sampler(seed);
    int certified = 0, sound = 0;
    for (int i = 0; i < samples; ++i) {
        const Vector y = certify_unit(sampler, map);
        const double delta = sampler.uniform(0.5, 0.9);
        const NoPreimageCertificate cert = certify_no_preimage(map, delta, y);
        if (!cert.certified) continue;
        ++certified;
        const Vector x = f_invert_radial(map, scale(delta / 2.0, y));
        if (strong_norm(map.model, x) >= 1.0) ++sound;
    }
    json j;
    j["samples"] = samples;
    j["certified"] = certified;
    j["sound"] = sound;
    const bool p = certified > 0 && sound == certified;
    j["pass"] = p;
    pass = pass && p;
    return j;
}

json battery_classification(const MapSpec& map, std::uint64_t seed, int samples, double tol,
                            bool& pass) {
    Sampler sampler(seed);
    const Vector origin = map.model.kind == ModelKind::LpGrid
                              ? Vector(GridFunction::zero(map.model.cells))
                              : Vector(SparseVector{});
    const bool zero_critical = classify_point(map, origin).cls == PointClass::Critical;
    double max_rel = 0.0;
    int regular = 0, log_scaled = 0;
    for (int i = 0; i < samples; ++i) {
        Vector x = sample_fd_point(sampler, map);
        const double lambda =
            std::exp(sampler.uniform(std::log(1e-8), std::log(2.0))) / strong_norm(map.model, x);
        x = scale(lambda, x);
        const Classification c = classify_point(map, x);
        if (c.cls == PointClass::Regular) ++regular;
        if (c.log_scale_used) ++log_scaled;
        max_rel = std::max(max_rel, c.max_residual);
    }
    json j;
    j["samples"] = samples;
    j["zero_is_critical"] = zero_critical;
    j["regular"] = regular;
    j["log_scaled"] = log_scaled;
    j["max_rel_residual"] = max_rel;
    const bool p = zero_critical && regular == samples && log_scaled > 0 && max_rel <= tol;
    j["pass"] = p;
    pass = pass && p;
    return j;
}

json battery_origin_decay(const MapSpec& map, std::uint64_t seed, int directions, bool& pass) {
    Sampler sampler(seed);
    const double s = static_cast<double>(map.gauge.degree());
    bool bounded = true, monotone = true;
    for (int d = 0; d < directions; ++d) {
        const Vector dir = sample_strong_point(sampler, map, 1.0, 1.0);
        double prev = 2.0;
        for (int k = 1; k <= 6; ++k) {
            const Vector h = scale(std::pow(10.0, -k), dir);
            const double nh = strong_norm(map.model, h);
            const double ratio = strong_norm(map.model, f_eval(map, h)) / nh;
            const double bound = std::exp(-1.0 / std::pow(map.model.comparison_constant * nh, s));
            bounded = bounded && ratio <= bound * (1.0 + 1e-12);
            monotone = monotone && (ratio < prev || (ratio == prev && ratio < 1e-290));
            prev = ratio;
        }
    }
    json j;
    j["directions"] = directions;
    j["bounded"] = bounded;
    j["monotone_decreasing"] = monotone;
    const bool p = bounded && monotone;
    j["pass"] = p;
    pass = pass && p;
    return j;
}

json battery_weaksep(std::uint64_t seed, int samples, bool& pass) {
    bool witness_ok = true;
    for (int q = 1; q <= 50; ++q) {
        const WeakSepWitness w = weaksep_witness(FunctionalFamily(FamilyKind::Coordinate), q);
        witness_ok = witness_ok && w.weak_norm <= w.bound;
        for (int k = 1; k <= q; ++k)
            witness_ok =
                witness_ok && FunctionalFamily(FamilyKind::Coordinate)
                                      .apply(static_cast<std::uint64_t>(k), w.x_q) == 0.0;
    }
    Sampler sampler(seed);
    int separated = 0;
    for (int i = 0; i < samples; ++i) {
        const FunctionalFamily fam(i % 2 == 0 ? FamilyKind::Coordinate : FamilyKind::DualEval);
        SparseVector x;
        while (x.is_zero()) x = sampler.sparse(1 + sampler.uniform_index(0, 7), 1, 4096);
        if (family_separation_check(fam, x)) ++separated;
    }
    json j;
    j["witness_ok"] = witness_ok;
    j["samples"] = samples;
    j["separated"] = separated;
    const bool p = witness_ok && separated == samples;
    j["pass"] = p;
    pass = pass && p;
    return j;
}

json battery_q5(std::uint64_t seed, int samples, bool& pass) {
    Sampler sampler(seed);
    double max_recon = 0.0;
    int bounds_ok = 0;
    for (int i = 0; i < samples; ++i) {
        const double sc = std::exp(sampler.uniform(std::log(0.1), std::log(10.0)));
        const SparseVector x = sampler.sparse(1 + sampler.uniform_index(0, 7), 1, 64).scaled(sc);
        const SparseVector h = sampler.sparse(1 + sampler.uniform_index(0, 7), 1, 64).scaled(sc);
        const RemainderSplit split = remainder_bounds_q5(x, h);
        const double scale5 = pow_int(lp_seq_norm(x, 5.0) + lp_seq_norm(h, 5.0), 5);
        const double recon = std::abs(split.main_term + split.A + split.B - split.total) /
                             std::max(scale5, 1e-300);
        max_recon = std::max(max_recon, recon);
        const bool ok = std::abs(split.A) <= split.bound_A * (1.0 + 1e-12) + 1e-300 &&
                        std::abs(split.B) <= split.bound_B * (1.0 + 1e-12) + 1e-300;
        if (ok) ++bounds_ok;
    }
    json j;
    j["samples"] = samples;
    j["max_reconstruction_rel_err"] = max_recon;
    j["bounds_ok"] = bounds_ok;
    const bool p = max_recon <= 1e-12 && bounds_ok == samples;
    j["pass"] = p;
    pass = pass && p;
    return j;
}

} // namespace

RunOutput run_report(const RunConfig& cfg) {
    RunOutput out;
    out.report["schema"] = "report/1";
    out.report["config"] = cfg.to_json();
    bool pass = true;

    RunOutput grad = run_gradcheck(cfg);
    pass = pass && grad.exit_code == 0;
    out.report["gradcheck"] = std::move(grad.report);

    RunConfig ncfg = cfg;
    ncfg.model.clear();
    ncfg.gauge.clear();
    ncfg.s = 2.0;
    ncfg.power = 1;
    RunOutput nonopen = run_nonopen(ncfg, 100);
    pass = pass && nonopen.exit_code == 0;
    out.report["nonopen"] = std::move(nonopen.report);

    json lipschitz = json::array(), solves = json::array(), certificates = json::array();
    json classification = json::array(), decay = json::array();
    for (const MapSpec& map : canonical_pairs(cfg)) {
        const auto tag = [&](json j) {
            j["model"] = map.model.id();
            j["gauge"] = map.gauge.id();
            return j;
        };
        lipschitz.push_back(tag(battery_lipschitz(map, cfg.seed, cfg.samples, pass)));
        solves.push_back(tag(battery_solve(map, cfg.seed, cfg.samples, cfg.tol_solve, pass)));
        certificates.push_back(tag(battery_certificates(map, cfg.seed, cfg.samples, pass)));
        classification.push_back(
            tag(battery_classification(map, cfg.seed, cfg.samples, cfg.tol_solve, pass)));
        decay.push_back(tag(battery_origin_decay(map, cfg.seed, 10, pass)));
    }
    out.report["lipschitz"] = std::move(lipschitz);
    out.report["solve"] = std::move(solves);
    out.report["certificates"] = std::move(certificates);
    out.report["classification"] = std::move(classification);
    out.report["origin_decay"] = std::move(decay);
    out.report["weaksep"] = battery_weaksep(cfg.seed, cfg.samples, pass);
    out.report["q5_split"] = battery_q5(cfg.seed, cfg.samples, pass);
    out.report["pass"] = pass;
    out.exit_code = pass ? 0 : 1;
    return out;
}

} // namespace nonopen
