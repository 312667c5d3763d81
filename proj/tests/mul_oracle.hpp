#pragma once

// Test-only brute-force product: expands each monomial pair into one index
// sequence and counts transpositions by bubble sort. Independent of the
// bitmask/popcount path in the library.

#include <cstdint>
#include <utility>
#include <vector>

#include "superheap/grassmann.hpp"

inline superheap::GrassmannElement oracle_mul(const superheap::GrassmannElement& a,
                                              const superheap::GrassmannElement& b) {
    using superheap::GrassmannElement;
    using superheap::Monomial;
    GrassmannElement out(a.generators());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<int> seq = ma.indices();
            const std::vector<int> tail = mb.indices();
            seq.insert(seq.end(), tail.begin(), tail.end());
            int swaps = 0;
            for (std::size_t pass = 0; pass + 1 < seq.size(); ++pass)
                for (std::size_t j = 0; j + 1 < seq.size() - pass; ++j)
                    if (seq[j] > seq[j + 1]) {
                        std::swap(seq[j], seq[j + 1]);
                        ++swaps;
                    }
            bool repeated = false;
            std::uint32_t bits = 0;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (i > 0 && seq[i] == seq[i - 1]) repeated = true;
                bits |= std::uint32_t{1} << (seq[i] - 1);
            }
            if (repeated) continue;
            superheap::Rational c = ca * cb;
            out += (swaps % 2 ? -c : c) * GrassmannElement::basis(a.generators(), Monomial{bits});
        }
    }
    return out;
}
