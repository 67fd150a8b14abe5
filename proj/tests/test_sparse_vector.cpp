#include <doctest.h>

#include "nonopen/sampling.hpp"
#include "nonopen/sparse_vector.hpp"

using namespace nonopen;

namespace {

bool canonical(const SparseVector& v) {
    const auto& e = v.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].value == 0.0) return false;
        if (e[i].index == 0) return false;
        if (i > 0 && e[i - 1].index >= e[i].index) return false;
    }
    return true;
}

} // namespace

TEST_CASE("canonical form") {
    const SparseVector v = SparseVector::from_entries({{4, 2.0}, {1, 1.0}, {4, -2.0}, {9, 0.0}});
    CHECK(canonical(v));
    CHECK(v.support_size() == 1);
    CHECK(v.at(1) == 1.0);
    CHECK(v.at(4) == 0.0);
    CHECK(v.at(9) == 0.0);

    CHECK(SparseVector{}.is_zero());
    CHECK_THROWS_AS(SparseVector::from_entries({{0, 1.0}}), parameter_error);
}

TEST_CASE("unbounded indices") {
    const std::uint64_t big = 1'000'000'000'000ull;
    const SparseVector v = SparseVector::unit(big, 3.5);
    CHECK(v.at(big) == 3.5);
    CHECK(v.max_index() == big);
    CHECK(v.support_size() == 1);
}

TEST_CASE("arithmetic preserves canonical form") {
    Sampler sampler(31);
    for (int i = 0; i < 300; ++i) {
        const SparseVector a = sampler.sparse(6, 1, 40);
        const SparseVector b = sampler.sparse(6, 1, 40);
        const double c = sampler.normal();
        CHECK(canonical(a + b));
        CHECK(canonical(a - b));
        CHECK(canonical(a.scaled(c)));
        CHECK(canonical(SparseVector::axpy(c, a, b)));
        // entrywise agreement with direct lookup
        const SparseVector s = SparseVector::axpy(c, a, b);
        for (const auto& e : s.entries()) CHECK(e.value == c * a.at(e.index) + b.at(e.index));
    }
}

TEST_CASE("cancellation drops entries") {
    const SparseVector a = SparseVector::from_entries({{2, 1.5}, {7, -3.0}});
    const SparseVector b = SparseVector::from_entries({{7, 3.0}});
    const SparseVector s = a + b;
    CHECK(s.support_size() == 1);
    CHECK(s.at(2) == 1.5);
    CHECK(a.scaled(0.0).is_zero());
}
