#pragma once

#include <cstdint>
#include <vector>

#include "superheap/grassmann.hpp"

namespace superheap {

/// Deterministic 64-bit generator (splitmix64). Hand-rolled so that seeded
/// runs produce identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound); bound >= 1. Modulo bias is
    /// irrelevant at the pool sizes used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Stream-splitting mix so independent trials can be seeded from one
/// run seed without sharing state.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return seed ^ (0x9E3779B97F4A7C15ull * (stream + 1));
}

/// Random element with every monomial of the requested parity (Even or
/// Odd) and coefficients drawn from the pool. Deterministic per rng state.
/// With zero generators the only odd element is 0.
GrassmannElement random_element(int num_generators, Parity parity, int max_terms,
                                const std::vector<Rational>& coeff_pool, Rng& rng);

/// Seeded convenience overload: same element for the same arguments.
GrassmannElement random_element(int num_generators, Parity parity, int max_terms,
                                const std::vector<Rational>& coeff_pool, std::uint64_t rng_seed);

}  // namespace superheap
