#include <doctest.h>

#include <cmath>

#include "nonopen/gauge.hpp"
#include "nonopen/runner.hpp"
#include "nonopen/sampling.hpp"
#include "nonopen/space_model.hpp"

using namespace nonopen;

TEST_CASE("strong norm examples") {
    CHECK(strong_norm(SpaceModel::l2_weighted(), SparseVector{}) == 0.0);
    CHECK(strong_norm(SpaceModel::lp_seq(5.0), SparseVector::unit(1)) == 1.0);
    // direct summation: |3| + |-4| = 7
    const SparseVector x = SparseVector::from_entries({{1, 3.0}, {4, -4.0}});
    CHECK(strong_norm(SpaceModel::lp_seq(1.0), x) == 7.0);

    CHECK(strong_norm(SpaceModel::linf_dyadic(), x) == 4.0);
    CHECK(strong_norm(SpaceModel::l2_weighted(), x) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("non-integer exponents") {
    const SpaceModel m = SpaceModel::lp_seq(2.5);
    CHECK(strong_norm(m, SparseVector::unit(1)) == 1.0);
    const SparseVector x = SparseVector::from_entries({{1, -2.0}, {3, 0.5}});
    const double expected = std::pow(std::exp(2.5 * std::log(2.0)) + std::exp(2.5 * std::log(0.5)),
                                     1.0 / 2.5);
    CHECK(strong_norm(m, x) == doctest::Approx(expected).epsilon(1e-15));
    // lq_even accepts a non-integer p below q
    CHECK(gauge_eval(GaugeSpec::lq_even(4), m, x) > 0.0);
}

TEST_CASE("grid norm is the exact cell integral") {
    const GridFunction f(2, {1.0, 0.0});
    CHECK(lp_grid_norm(f, 1.0) == 0.5);
    CHECK(lp_grid_norm(f, 2.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    const SpaceModel grid = SpaceModel::lp_grid(4.0, 2);
    CHECK(strong_norm(grid, f) == doctest::Approx(std::pow(0.5, 0.25)).epsilon(1e-15));
}

TEST_CASE("representation mismatches") {
    CHECK_THROWS_AS(strong_norm(SpaceModel::l2_weighted(), GridFunction::zero(4)),
                    representation_error);
    CHECK_THROWS_AS(strong_norm(SpaceModel::lp_grid(2.0, 8), SparseVector::unit(1)),
                    representation_error);
    // cell count must match the model
    CHECK_THROWS_AS(strong_norm(SpaceModel::lp_grid(2.0, 8), GridFunction::zero(4)),
                    representation_error);
}

TEST_CASE("norm comparison examples") {
    const auto c1 = norm_comparison_check(SpaceModel::lp_seq(2.0), 2.0, 4.0,
                                          SparseVector::unit(7));
    CHECK(c1.lhs == 1.0);
    CHECK(c1.rhs == 1.0);
    CHECK(c1.holds);

    const SparseVector ones = SparseVector::from_entries({{1, 1.0}, {2, 1.0}});
    const auto c2 = norm_comparison_check(SpaceModel::lp_seq(1.0), 1.0, 2.0, ones);
    CHECK(c2.lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(c2.rhs == 2.0);
    CHECK(c2.holds);

    const auto c3 =
        norm_comparison_check(SpaceModel::lp_grid(2.0, 2), 1.0, 2.0, GridFunction(2, {1.0, 0.0}));
    CHECK(c3.lhs == 0.5);
    CHECK(c3.rhs == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(c3.holds);

    CHECK_THROWS_AS(
        norm_comparison_check(SpaceModel::lp_seq(2.0), 2.0, 2.0, SparseVector::unit(1)),
        parameter_error);
}

TEST_CASE("norm axioms on random samples") {
    RunConfig cfg;
    for (const MapSpec& map : canonical_pairs(cfg)) {
        Sampler sampler(7);
        for (int i = 0; i < 200; ++i) {
            const Vector x = sample_strong_point(sampler, map, 0.1, 3.0);
            const Vector y = sample_strong_point(sampler, map, 0.1, 3.0);
            const double a = sampler.normal();
            const double nx = strong_norm(map.model, x);
            const double ny = strong_norm(map.model, y);
            // absolute homogeneity
            CHECK(strong_norm(map.model, scale(a, x)) ==
                  doctest::Approx(std::abs(a) * nx).epsilon(1e-12));
            // triangle inequality
            CHECK(strong_norm(map.model, add(x, y)) <= nx + ny + 1e-12);
        }
    }
}

TEST_CASE("weak norm dominated by the strong norm") {
    RunConfig cfg;
    for (const MapSpec& map : canonical_pairs(cfg)) {
        Sampler sampler(11);
        for (int i = 0; i < 1000; ++i) {
            const Vector x = sample_strong_point(sampler, map, 0.05, 4.0);
            const double weak = weak_norm(map.gauge, map.model, x);
            const double strong = strong_norm(map.model, x);
            CHECK(weak <= map.model.comparison_constant * strong + 1e-12);
        }
    }
}

TEST_CASE("sequence and grid norm inequalities on random samples") {
    Sampler sampler(13);
    const SpaceModel seq = SpaceModel::lp_seq(1.0);
    for (int i = 0; i < 1000; ++i) {
        const SparseVector x = sampler.sparse(8, 1, 64);
        const auto c = norm_comparison_check(seq, 1.0, 2.0, Vector(x));
        CHECK(c.holds);
    }
    const SpaceModel grid = SpaceModel::lp_grid(2.0, 16);
    for (int i = 0; i < 1000; ++i) {
        const GridFunction f = sampler.grid(16);
        const auto c = norm_comparison_check(grid, 1.0, 2.0, Vector(f));
        CHECK(c.holds);
    }
}
