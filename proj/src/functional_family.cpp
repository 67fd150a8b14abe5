#include "nonopen/functional_family.hpp"

#include <algorithm>

#include "nonopen/errors.hpp"

namespace nonopen {

std::string FunctionalFamily::id() const {
    return kind_ == FamilyKind::Coordinate ? "coordinate" : "dual_eval";
}

FunctionalFamily FunctionalFamily::from_id(const std::string& id) {
    if (id == "coordinate") return FunctionalFamily(FamilyKind::Coordinate);
    if (id == "dual_eval") return FunctionalFamily(FamilyKind::DualEval);
    throw config_error("unknown functional family: " + id);
}

double FunctionalFamily::apply(std::uint64_t k, const SparseVector& x) const {
    if (k == 0) throw parameter_error("functional indices are 1-based");
    if (kind_ == FamilyKind::Coordinate) return x.at(k);
    return 0.5 * (x.at(k) + x.at(k + 1));
}

std::vector<std::uint64_t> FunctionalFamily::candidate_indices(const SparseVector& x) const {
    std::vector<std::uint64_t> ks;
    ks.reserve(2 * x.support_size());
    for (const auto& e : x.entries()) {
        if (kind_ == FamilyKind::DualEval && e.index > 1) ks.push_back(e.index - 1);
        ks.push_back(e.index);
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

SparseVector FunctionalFamily::norming_vector(std::uint64_t k) const {
    if (kind_ == FamilyKind::Coordinate) return SparseVector::unit(k);
    return SparseVector::from_entries({{k, 1.0}, {k + 1, 1.0}});
}

bool FunctionalFamily::separation_check(const SparseVector& x) const {
    if (x.is_zero()) throw parameter_error("separation check requires a nonzero vector");
    const std::uint64_t bound = x.max_index();
    for (std::uint64_t k : candidate_indices(x)) {
        if (k <= bound && apply(k, x) != 0.0) return true;
    }
    return false;
}

} // namespace nonopen
