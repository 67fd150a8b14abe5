#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonopen/json_io.hpp"
#include "nonopen/sampling.hpp"
#include "nonopen/witnesses.hpp"

namespace nonopen {

/**
 * One validated configuration drives every command; the seed fully
 * determines all random sampling, so identical configs produce
 * byte-identical reports.
 */
struct RunConfig {
    std::string model;  // empty selects the canonical partner / full suite
    std::string gauge;
    double p = 0.0;     // 0 = default (2 for sequences, 4 for the grid)
    int q = 4;
    int power = 1;
    int cells = 64;
    std::string family = "coordinate";
    double s = 2.0;
    std::uint64_t seed = 1;
    int samples = 100;
    double tol_fd = 1e-6;    // finite-difference relative tolerance
    double tol_solve = 1e-9; // solve residual tolerance

    static RunConfig from_json(const json& j);
    json to_json() const;
};

// Resolve the configured (model, gauge) pair; either side defaults to the
// canonical partner of the other. Throws config_error on bad combinations.
MapSpec resolve_map(const RunConfig& cfg);

// The built-in suite: every supported (model, gauge) pairing.
std::vector<MapSpec> canonical_pairs(const RunConfig& cfg);

struct RunOutput {
    int exit_code = 0; // 0 success, 1 property failure, 2 configuration error
    json report;
    std::string csv; // only set by table-producing commands
};

// Random point in the binary64-informative band of a pair: sparse support
// <= 8 on a per-gauge index range (grid points use every cell), rescaled so
// the gauge value lands in [0.7, 1.3].
Vector sample_fd_point(Sampler& sampler, const MapSpec& map);

// Base point and direction on a shared support (keeps the finite-difference
// error second order for the power gauges), both in the same band.
std::pair<Vector, Vector> sample_fd_pair(Sampler& sampler, const MapSpec& map);

// Random vector rescaled to a strong norm in [lo, hi].
Vector sample_strong_point(Sampler& sampler, const MapSpec& map, double lo, double hi);

RunOutput run_models();
RunOutput run_gradcheck(const RunConfig& cfg);
RunOutput run_nonopen(const RunConfig& cfg, std::uint64_t n_max);
RunOutput run_certify(const RunConfig& cfg, double delta, const Vector& y);
RunOutput run_eval(const RunConfig& cfg, const Vector& x);
RunOutput run_solve(const RunConfig& cfg, const Vector& x, const Vector& y);
RunOutput run_invert(const RunConfig& cfg, const Vector& y);
RunOutput run_report(const RunConfig& cfg);

// CSV table for a witness report: n,gamma,sqrt_n,z_norm,inv_norm,satisfied.
std::string witness_csv(const WitnessReport& report);

} // namespace nonopen
