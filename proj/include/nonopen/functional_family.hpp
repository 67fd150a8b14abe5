#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nonopen/sparse_vector.hpp"

namespace nonopen {

enum class FamilyKind {
    Coordinate, // l_k(x) = x_k
    DualEval,   // l_k(x) = (x_k + x_{k+1}) / 2, evaluation against unit l1 probes
};

/**
 * Countable separating family {l_k} of unit-norm linear functionals on the
 * sup-norm sequence model. Both built-in families satisfy, exactly on
 * finitely supported vectors:
 *   - |l_k(x)| <= sup_norm(x) for all k (unit-norm certificate), and
 *   - x != 0  implies  l_k(x) != 0 for some k <= max support index.
 */
class FunctionalFamily {
public:
    explicit FunctionalFamily(FamilyKind kind) : kind_(kind) {}

    FamilyKind kind() const { return kind_; }
    std::string id() const;

    static FunctionalFamily from_id(const std::string& id);

    // l_k(x), 1-based k
    double apply(std::uint64_t k, const SparseVector& x) const;

    // Sorted indices k for which l_k(x) can be nonzero; O(support) long and
    // never exceeding the max support index of x.
    std::vector<std::uint64_t> candidate_indices(const SparseVector& x) const;

    // Unit sup-norm vector v with l_k(v) = 1, certifying ||l_k|| = 1.
    SparseVector norming_vector(std::uint64_t k) const;

    // True iff some l_k with k <= max support index has l_k(x) != 0.
    // Requires x != 0.
    bool separation_check(const SparseVector& x) const;

    friend bool operator==(const FunctionalFamily&, const FunctionalFamily&) = default;

private:
    FamilyKind kind_;
};

} // namespace nonopen
