#pragma once

#include <cstdint>
#include <vector>

namespace nonopen {

struct SparseEntry {
    std::uint64_t index; // 1-based, unbounded
    double value;        // never 0.0 in canonical form

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/**
 * Finitely supported real sequence with unbounded 1-based indices.
 *
 * Canonical form: entries sorted by strictly increasing index, no stored
 * zero values, empty list is the zero vector. All operations preserve it.
 * Only values that are exactly 0.0 are dropped; there is no epsilon pruning.
 */
class SparseVector {
public:
    SparseVector() = default;

    // Sorts, sums duplicate indices, drops exact zeros. Index 0 is rejected.
    static SparseVector from_entries(std::vector<SparseEntry> entries);

    // e_k
    static SparseVector unit(std::uint64_t k, double value = 1.0);

    const std::vector<SparseEntry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    std::uint64_t min_index() const { return entries_.empty() ? 0 : entries_.front().index; }
    std::uint64_t max_index() const { return entries_.empty() ? 0 : entries_.back().index; }

    // 0.0 for indices outside the support
    double at(std::uint64_t k) const;

    SparseVector scaled(double a) const;

    // a*x + y
    static SparseVector axpy(double a, const SparseVector& x, const SparseVector& y);

    friend SparseVector operator+(const SparseVector& a, const SparseVector& b) {
        return axpy(1.0, a, b);
    }
    friend SparseVector operator-(const SparseVector& a, const SparseVector& b) {
        return axpy(-1.0, b, a);
    }
    friend SparseVector operator*(double a, const SparseVector& x) { return x.scaled(a); }

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

    // Visits the union of both supports in increasing index order as
    // f(index, a_value, b_value); absent entries are passed as 0.0.
    template <typename F>
    static void for_each_union(const SparseVector& a, const SparseVector& b, F&& f) {
        auto ia = a.entries_.begin(), ib = b.entries_.begin();
        while (ia != a.entries_.end() || ib != b.entries_.end()) {
            if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->index < ib->index)) {
                f(ia->index, ia->value, 0.0);
                ++ia;
            } else if (ia == a.entries_.end() || ib->index < ia->index) {
                f(ib->index, 0.0, ib->value);
                ++ib;
            } else {
                f(ia->index, ia->value, ib->value);
                ++ia;
                ++ib;
            }
        }
    }

private:
    std::vector<SparseEntry> entries_;
};

} // namespace nonopen
