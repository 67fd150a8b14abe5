#include "nonopen/sparse_vector.hpp"

#include <algorithm>

#include "nonopen/errors.hpp"

namespace nonopen {

SparseVector SparseVector::from_entries(std::vector<SparseEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    SparseVector out;
    out.entries_.reserve(entries.size());
    for (const auto& e : entries) {
        if (e.index == 0) throw parameter_error("sparse vector indices are 1-based");
        if (!out.entries_.empty() && out.entries_.back().index == e.index) {
            out.entries_.back().value += e.value;
            if (out.entries_.back().value == 0.0) out.entries_.pop_back();
        } else if (e.value != 0.0) {
            out.entries_.push_back(e);
        }
    }
    return out;
}

SparseVector SparseVector::unit(std::uint64_t k, double value) {
    return from_entries({{k, value}});
}

double SparseVector::at(std::uint64_t k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const SparseEntry& e, std::uint64_t idx) { return e.index < idx; });
    return (it != entries_.end() && it->index == k) ? it->value : 0.0;
}

SparseVector SparseVector::scaled(double a) const {
    SparseVector out;
    out.entries_.reserve(entries_.size());
    for (const auto& e : entries_) {
        const double v = a * e.value;
        if (v != 0.0) out.entries_.push_back({e.index, v});
    }
    return out;
}

SparseVector SparseVector::axpy(double a, const SparseVector& x, const SparseVector& y) {
    SparseVector out;
    out.entries_.reserve(x.entries_.size() + y.entries_.size());
    for_each_union(x, y, [&](std::uint64_t k, double xv, double yv) {
        const double v = a * xv + yv;
        if (v != 0.0) out.entries_.push_back({k, v});
    });
    return out;
}

} // namespace nonopen
