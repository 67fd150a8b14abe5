#include "nonopen/sampling.hpp"

#include <cmath>
#include <numbers>
#include <set>

namespace nonopen {

double Sampler::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

std::uint64_t Sampler::uniform_index(std::uint64_t lo, std::uint64_t hi) {
    return lo + rng_() % (hi - lo + 1);
}

SparseVector Sampler::sparse(std::size_t support, std::uint64_t min_index,
                             std::uint64_t max_index) {
    const std::uint64_t span = max_index - min_index + 1;
    if (support > span) support = static_cast<std::size_t>(span);
    std::set<std::uint64_t> idx;
    while (idx.size() < support) idx.insert(uniform_index(min_index, max_index));
    std::vector<SparseEntry> entries;
    entries.reserve(support);
    for (std::uint64_t k : idx) entries.push_back({k, normal()});
    return SparseVector::from_entries(std::move(entries));
}

GridFunction Sampler::grid(int cells) {
    std::vector<double> v(static_cast<std::size_t>(cells));
    for (double& t : v) t = normal();
    return GridFunction(cells, std::move(v));
}

} // namespace nonopen
