#include "superheap/sampling.hpp"

#include <bit>
#include <stdexcept>

namespace superheap {

GrassmannElement random_element(int num_generators, Parity parity, int max_terms,
                                const std::vector<Rational>& coeff_pool, Rng& rng) {
    if (parity == Parity::Mixed)
        throw std::invalid_argument("random_element: parity must be Even or Odd");
    if (max_terms < 1) throw std::invalid_argument("random_element: max_terms must be >= 1");
    if (coeff_pool.empty()) throw std::invalid_argument("random_element: empty coefficient pool");

    GrassmannElement out(num_generators);
    if (num_generators == 0 && parity == Parity::Odd) return out;

    const std::uint32_t full =
        num_generators >= 32 ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << num_generators) - 1;
    const int want = parity == Parity::Odd ? 1 : 0;
    const int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    for (int t = 0; t < terms; ++t) {
        std::uint32_t mask;
        do {
            mask = static_cast<std::uint32_t>(rng.next()) & full;
        } while ((std::popcount(mask) & 1) != want);
        const Rational& c = coeff_pool[rng.below(coeff_pool.size())];
        out += c * GrassmannElement::basis(out.generators(), Monomial{mask});
    }
    return out;
}

GrassmannElement random_element(int num_generators, Parity parity, int max_terms,
                                const std::vector<Rational>& coeff_pool, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return random_element(num_generators, parity, max_terms, coeff_pool, rng);
}

}  // namespace superheap
