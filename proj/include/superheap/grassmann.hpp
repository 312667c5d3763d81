#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superheap/rational.hpp"

namespace superheap {

/// Generator indices are 1-based; a monomial fits in one machine word.
inline constexpr int kMaxGenerators = 32;

enum class Parity { Even, Odd, Mixed };

const char* to_string(Parity p);

/// Product of distinct anticommuting generators, one bit per index
/// (bit i-1 stands for the i-th generator). Empty set is the unit.
struct Monomial {
    std::uint32_t bits = 0;

    int degree() const { return std::popcount(bits); }

    /// Ascending generator indices (1-based).
    std::vector<int> indices() const;

    friend bool operator==(Monomial a, Monomial b) { return a.bits == b.bits; }
    friend bool operator<(Monomial a, Monomial b) { return a.bits < b.bits; }
};

/// Sign of concatenating two disjoint sorted generator runs into one sorted
/// run (+1/-1), or 0 when a generator repeats and the product vanishes.
int product_sign(Monomial a, Monomial b);

/// Canonical print/storage order: ascending degree, then lexicographic
/// comparison of the ascending index tuples.
bool degree_lex_less(Monomial a, Monomial b);

/// Element of the exterior algebra on `generators()` anticommuting
/// generators, with exact rational coefficients. Always normalized: no
/// stored coefficient is zero, so equality is plain map equality.
/// Immutable in practice — every operation returns a fresh value.
class GrassmannElement {
public:
    /// Zero element of the algebra on m generators.
    explicit GrassmannElement(int num_generators = 0);

    static GrassmannElement zero(int m) { return GrassmannElement(m); }
    static GrassmannElement constant(int m, const Rational& c);
    /// The index-th generator (1-based).
    static GrassmannElement generator(int m, int index);
    /// Basis element: one monomial with coefficient 1.
    static GrassmannElement basis(int m, Monomial mono);
    /// Builds an element from raw (index list, coefficient) terms. Index
    /// lists are sign-normalized into ascending order; a repeated index
    /// makes the term vanish; like monomials are combined.
    static GrassmannElement from_terms(
        int m, const std::vector<std::pair<std::vector<int>, Rational>>& raw_terms);

    int generators() const { return num_generators_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Parity parity() const;
    /// Coefficient of the unit monomial (0 when absent).
    Rational body() const;
    /// The nilpotent remainder: *this minus its body.
    GrassmannElement soul() const;

    GrassmannElement operator-() const;
    GrassmannElement& operator+=(const GrassmannElement& o);

    friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b);
    friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b);
    friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
    friend GrassmannElement operator*(const Rational& c, const GrassmannElement& a);

    friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
        return a.num_generators_ == b.num_generators_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GrassmannElement& a, const GrassmannElement& b) { return !(a == b); }

private:
    void add_term(Monomial mono, const Rational& c);
    static void require_same_algebra(const GrassmannElement& a, const GrassmannElement& b,
                                     const char* op);

    int num_generators_;
    std::map<Monomial, Rational> terms_;
};

std::pair<Rational, GrassmannElement> body_soul(const GrassmannElement& a);

/// Inverse of an even element with nonzero body, by the terminating
/// Neumann series over the nilpotent soul. Exact: a * invert_even(a) == 1.
GrassmannElement invert_even(const GrassmannElement& a);

/// Unital parity-preserving algebra homomorphism between exterior algebras,
/// determined by odd images of the source generators and extended
/// multiplicatively.
class AlgebraHom {
public:
    AlgebraHom(int source_generators, int target_generators,
               std::vector<GrassmannElement> images);

    int source_generators() const { return source_; }
    int target_generators() const { return target_; }
    const std::vector<GrassmannElement>& images() const { return images_; }

    GrassmannElement operator()(const GrassmannElement& a) const;

private:
    int source_;
    int target_;
    std::vector<GrassmannElement> images_;
};

AlgebraHom identity_hom(int m);
/// Composite acting as `after(before(x))` on elements.
AlgebraHom compose(const AlgebraHom& after, const AlgebraHom& before);

}  // namespace superheap
