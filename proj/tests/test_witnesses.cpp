#include <doctest.h>

#include <cmath>

#include "nonopen/runner.hpp"
#include "nonopen/sampling.hpp"
#include "nonopen/witnesses.hpp"
#include "oracles.hpp"

using namespace nonopen;

namespace {
const MapSpec kMap{SpaceModel::l2_weighted(), GaugeSpec::weighted_l2()};
}

TEST_CASE("gamma records match the frozen bisection oracle") {
    const auto recs = gamma_sequence(2.0, {1, 2, 10, 100, 1000});
    CHECK(recs[0].gamma == doctest::Approx(oracles::kGamma1).epsilon(1e-12));
    CHECK(recs[1].gamma == doctest::Approx(oracles::kGamma2).epsilon(1e-12));
    CHECK(recs[2].gamma == doctest::Approx(oracles::kGamma10).epsilon(1e-12));
    CHECK(recs[3].gamma == doctest::Approx(oracles::kGamma100).epsilon(1e-12));
    CHECK(recs[4].gamma == doctest::Approx(oracles::kGamma1000).epsilon(1e-12));
    for (const auto& r : recs) {
        CHECK(r.satisfied);
        CHECK(r.residual <= 1e-9);
    }
    CHECK_THROWS_AS(gamma_sequence(2.0, {0}), parameter_error);
    CHECK_THROWS_AS(solve_gamma(-1.0, 10.0), parameter_error);
}

TEST_CASE("gamma sweep: monotone and above sqrt(n)") {
    std::vector<std::uint64_t> ns(1000);
    for (std::uint64_t i = 0; i < 1000; ++i) ns[i] = i + 1;
    const auto recs = gamma_sequence(2.0, ns);
    double prev = 0.0;
    for (const auto& r : recs) {
        CHECK(r.satisfied); // gamma >= sqrt(n) for every tested n
        CHECK(r.gamma > prev);
        CHECK(r.residual <= 1e-9);
        prev = r.gamma;
    }
}

TEST_CASE("no-preimage certificate examples") {
    // ln(2/delta) = 1 at delta = 2/e, so the threshold is exactly 1
    const auto unit = certify_no_preimage(kMap, 2.0 / std::exp(1.0), SparseVector::unit(1));
    CHECK(unit.threshold == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(unit.certified); // |||e_1||| = 1 is not strictly below 1

    const auto far = certify_no_preimage(kMap, 0.2, SparseVector::unit(100));
    CHECK(far.threshold == doctest::Approx(oracles::kThresholdDelta02).epsilon(1e-12));
    CHECK(far.weak_norm_y == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(far.certified);

    CHECK_THROWS_AS(certify_no_preimage(kMap, 1.5, SparseVector::unit(1)), parameter_error);
    CHECK_THROWS_AS(certify_no_preimage(kMap, 0.0, SparseVector::unit(1)), parameter_error);
    CHECK_THROWS_AS(certify_no_preimage(kMap, 0.2, SparseVector::unit(1, 2.0)), parameter_error);
}

TEST_CASE("certificates are sound: certified targets invert outside the ball") {
    RunConfig cfg;
    for (const MapSpec& map : canonical_pairs(cfg)) {
        Sampler sampler(53);
        int certified = 0;
        for (int i = 0; i < 200; ++i) {
            const double delta = sampler.uniform(0.5, 0.9);
            const std::uint64_t k = sampler.uniform_index(8, 64);
            Vector y;
            if (map.model.kind == ModelKind::LpGrid) {
                const double v =
                    std::pow(static_cast<double>(map.model.cells), 1.0 / map.model.p);
                y = GridFunction::cell_indicator(map.model.cells,
                                                 static_cast<int>(k % map.model.cells), v);
            } else if (map.model.kind == ModelKind::LpSeq) {
                std::vector<SparseEntry> entries;
                const std::uint64_t m = 64 + k;
                const double v = std::pow(static_cast<double>(m), -1.0 / map.model.p);
                for (std::uint64_t j = 1; j <= m; ++j) entries.push_back({j, v});
                y = SparseVector::from_entries(std::move(entries));
            } else {
                y = SparseVector::unit(map.model.kind == ModelKind::L2Weighted ? k * k : k);
            }
            const auto cert = certify_no_preimage(map, delta, y);
            if (!cert.certified) continue;
            ++certified;
            const Vector x = f_invert_radial(map, scale(delta / 2.0, y));
            CHECK(strong_norm(map.model, x) >= 1.0);
        }
        CHECK(certified > 150);
    }
}

TEST_CASE("classification") {
    CHECK(classify_point(kMap, SparseVector{}).cls == PointClass::Critical);

    const Classification reg = classify_point(kMap, SparseVector::unit(1));
    CHECK(reg.cls == PointClass::Regular);
    CHECK(reg.max_residual <= 1e-9);
    CHECK_FALSE(reg.log_scale_used);

    const Classification tiny = classify_point(kMap, SparseVector::unit(1, 1e-8));
    CHECK(tiny.cls == PointClass::Regular);
    CHECK(tiny.max_residual <= 1e-9);
    CHECK(tiny.log_scale_used);
}

TEST_CASE("divergence report on the weighted-l2 model") {
    const WitnessReport rep = divergence_report(kMap, {1, 10, 100});
    CHECK(rep.divergence[0].z_norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.divergence[0].inv_norm == doctest::Approx(oracles::kGamma1).epsilon(1e-8));
    CHECK(rep.divergence[1].z_norm == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(rep.divergence[1].inv_norm == doctest::Approx(oracles::kGamma10).epsilon(1e-8));
    CHECK(rep.divergence[2].inv_norm == doctest::Approx(oracles::kGamma100).epsilon(1e-8));
    // the radial inversion and the implicit-equation root are two code paths
    CHECK(rep.max_path_mismatch <= 1e-8);
    CHECK(rep.all_satisfied);
    CHECK_THROWS_AS(divergence_report(kMap, {}), parameter_error);

    const MapSpec grid{SpaceModel::lp_grid(4.0, 8), GaugeSpec::grid_square()};
    CHECK_THROWS_AS(divergence_report(grid, {1, 2}), config_error);
}

TEST_CASE("divergence report on sup-norm and lp models") {
    for (const MapSpec& map :
         {MapSpec{SpaceModel::linf_dyadic(), GaugeSpec::dyadic()},
          MapSpec{SpaceModel::weak_sep(FamilyKind::Coordinate),
                  GaugeSpec::weaksep(FamilyKind::Coordinate)},
          MapSpec{SpaceModel::lp_seq(2.0), GaugeSpec::lq_even(4)}}) {
        const WitnessReport rep = divergence_report(map, {1, 2, 4, 8, 16, 32});
        CHECK(rep.all_satisfied);
        CHECK(rep.max_path_mismatch <= 1e-8);
        for (std::size_t i = 1; i < rep.divergence.size(); ++i) {
            CHECK(rep.divergence[i].z_norm < rep.divergence[i - 1].z_norm);
            CHECK(rep.divergence[i].inv_norm > rep.divergence[i - 1].inv_norm);
        }
    }
}

TEST_CASE("weak separability witnesses") {
    const FunctionalFamily coord(FamilyKind::Coordinate);
    const auto w3 = weaksep_witness(coord, 3);
    CHECK(w3.x_q == SparseVector::unit(4));
    CHECK(w3.weak_norm == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(w3.bound == doctest::Approx(0.35355339059327373).epsilon(1e-15));

    const auto w1 = weaksep_witness(coord, 1);
    CHECK(w1.weak_norm == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(w1.bound == doctest::Approx(0.7071067811865476).epsilon(1e-15));

    for (int q = 1; q <= 50; ++q) {
        const auto w = weaksep_witness(coord, q);
        // the squared weak norm is the exact dyadic weight
        CHECK(w.weak_norm * w.weak_norm ==
              doctest::Approx(std::ldexp(1.0, -(q + 1))).epsilon(1e-15));
        CHECK(w.weak_norm <= w.bound);
        for (int k = 1; k <= q; ++k)
            CHECK(coord.apply(static_cast<std::uint64_t>(k), w.x_q) == 0.0);
    }
    CHECK_THROWS_AS(weaksep_witness(FunctionalFamily(FamilyKind::DualEval), 3), parameter_error);
    CHECK_THROWS_AS(weaksep_witness(coord, 0), parameter_error);
}

TEST_CASE("q5 remainder split examples") {
    const SparseVector e1 = SparseVector::unit(1);

    const RemainderSplit none = remainder_bounds_q5(e1, SparseVector{});
    CHECK(none.A == 0.0);
    CHECK(none.B == 0.0);
    CHECK(none.bound_A == 0.0);
    CHECK(none.bound_B == 0.0);

    // disjoint support allocates the pure-h term to B
    const RemainderSplit disj = remainder_bounds_q5(e1, SparseVector::unit(2));
    CHECK(disj.A == 0.0);
    CHECK(disj.B == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(disj.bound_A > 0.0);
    CHECK(disj.bound_B > 0.0);

    const RemainderSplit small = remainder_bounds_q5(e1, SparseVector::unit(1, 0.1));
    CHECK(small.A == doctest::Approx(oracles::kQ5A_small).epsilon(1e-13));
    CHECK(small.B == doctest::Approx(oracles::kQ5B_small).epsilon(1e-13));

    // sign-crossing coordinate, closed form vs quadrature
    const RemainderSplit cross = remainder_bounds_q5(e1, SparseVector::unit(1, -2.0));
    const auto [qa, qb] = oracles::q5_remainders(1.0, -2.0);
    CHECK(cross.A == doctest::Approx(qa).epsilon(1e-9));
    CHECK(cross.B == doctest::Approx(qb).epsilon(1e-6));
    CHECK(cross.A == doctest::Approx(10.0).epsilon(1e-13));
    CHECK(std::abs(cross.B) <= 1e-13);
}

TEST_CASE("q5 split agrees with quadrature coordinatewise") {
    Sampler sampler(59);
    for (int i = 0; i < 50; ++i) {
        const double a = 2.0 * sampler.normal();
        const double b = 2.0 * sampler.normal();
        const RemainderSplit split =
            remainder_bounds_q5(SparseVector::unit(1, a), SparseVector::unit(1, b));
        const auto [qa, qb] = oracles::q5_remainders(a, b);
        const double scale = std::max(1.0, std::pow(std::abs(a) + std::abs(b), 5.0));
        CHECK(std::abs(split.A - qa) <= 1e-6 * scale);
        CHECK(std::abs(split.B - qb) <= 1e-6 * scale);
    }
}

TEST_CASE("q5 reconstruction identity and bounds") {
    Sampler sampler(61);
    for (int i = 0; i < 1000; ++i) {
        const double sc = std::exp(sampler.uniform(std::log(0.1), std::log(10.0)));
        const SparseVector x = sampler.sparse(1 + sampler.uniform_index(0, 7), 1, 64).scaled(sc);
        const SparseVector h = sampler.sparse(1 + sampler.uniform_index(0, 7), 1, 64).scaled(sc);
        const RemainderSplit split = remainder_bounds_q5(x, h);
        const double na = lp_seq_norm(x, 5.0), nb = lp_seq_norm(h, 5.0);
        const double scale = std::max(std::pow(na + nb, 5.0), 1e-300);
        CHECK(std::abs(split.main_term + split.A + split.B - split.total) <= 1e-12 * scale);
        CHECK(std::abs(split.A) <= split.bound_A * (1.0 + 1e-12));
        CHECK(std::abs(split.B) <= split.bound_B * (1.0 + 1e-12));
    }
}

TEST_CASE("origin decay is bounded and monotone") {
    RunConfig cfg;
    for (const MapSpec& map : canonical_pairs(cfg)) {
        Sampler sampler(67);
        const double s = static_cast<double>(map.gauge.degree());
        for (int d = 0; d < 10; ++d) {
            const Vector dir = sample_strong_point(sampler, map, 1.0, 1.0);
            double prev = 2.0;
            for (int k = 1; k <= 6; ++k) {
                const Vector h = scale(std::pow(10.0, -k), dir);
                const double nh = strong_norm(map.model, h);
                const double ratio = strong_norm(map.model, f_eval(map, h)) / nh;
                CHECK(ratio <= std::exp(-1.0 / std::pow(nh, s)) * (1.0 + 1e-12));
                CHECK(ratio <= prev);
                prev = ratio;
            }
        }
    }
}
