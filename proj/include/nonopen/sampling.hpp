#pragma once

#include <cstdint>
#include <random>

#include "nonopen/vector.hpp"

namespace nonopen {

/**
 * Seeded sampler with hand-rolled transforms so that a seed fully
 * determines every draw independent of the standard library's
 * distribution implementations.
 */
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    // [0, 1)
    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // standard normal via Box-Muller
    double normal();

    // inclusive range
    std::uint64_t uniform_index(std::uint64_t lo, std::uint64_t hi);

    // `support` distinct indices in [min_index, max_index], standard normal values
    SparseVector sparse(std::size_t support, std::uint64_t min_index, std::uint64_t max_index);

    GridFunction grid(int cells);

private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace nonopen
