#include "superheap/grassmann.hpp"

#include <stdexcept>
#include <utility>

namespace superheap {

namespace {

void require_generator_count(int m) {
    if (m < 0 || m > kMaxGenerators)
        throw std::invalid_argument("generator count must be in [0, " +
                                    std::to_string(kMaxGenerators) + "], got " + std::to_string(m));
}

void require_index(int index, int m) {
    if (index < 1 || index > m)
        throw std::invalid_argument("generator index " + std::to_string(index) +
                                    " out of range [1, " + std::to_string(m) + "]");
}

}  // namespace

const char* to_string(Parity p) {
    switch (p) {
        case Parity::Even: return "Even";
        case Parity::Odd: return "Odd";
        case Parity::Mixed: return "Mixed";
    }
    return "?";
}

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    std::uint32_t rest = bits;
    while (rest) {
        out.push_back(std::countr_zero(rest) + 1);
        rest &= rest - 1;
    }
    return out;
}

int product_sign(Monomial a, Monomial b) {
    if (a.bits & b.bits) return 0;
    // Each generator of b moves left past the generators of a above it.
    int swaps = 0;
    std::uint32_t rest = b.bits;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        swaps += std::popcount((a.bits >> j) >> 1);
    }
    return (swaps & 1) ? -1 : 1;
}

bool degree_lex_less(Monomial a, Monomial b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::uint32_t x = a.bits, y = b.bits;
    while (x && y) {
        int i = std::countr_zero(x), j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

GrassmannElement::GrassmannElement(int num_generators) : num_generators_(num_generators) {
    require_generator_count(num_generators);
}

GrassmannElement GrassmannElement::constant(int m, const Rational& c) {
    GrassmannElement out(m);
    out.add_term(Monomial{0}, c);
    return out;
}

GrassmannElement GrassmannElement::generator(int m, int index) {
    require_generator_count(m);
    require_index(index, m);
    GrassmannElement out(m);
    out.add_term(Monomial{std::uint32_t{1} << (index - 1)}, Rational(1));
    return out;
}

GrassmannElement GrassmannElement::basis(int m, Monomial mono) {
    require_generator_count(m);
    for (int index : mono.indices()) require_index(index, m);
    GrassmannElement out(m);
    out.add_term(mono, Rational(1));
    return out;
}

GrassmannElement GrassmannElement::from_terms(
    int m, const std::vector<std::pair<std::vector<int>, Rational>>& raw_terms) {
    GrassmannElement out(m);
    for (const auto& [indices, coeff] : raw_terms) {
        std::vector<int> idx = indices;
        // Insertion sort counting transpositions; the permutation sign
        // multiplies into the coefficient.
        int swaps = 0;
        for (std::size_t i = 1; i < idx.size(); ++i)
            for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
                std::swap(idx[j - 1], idx[j]);
                ++swaps;
            }
        std::uint32_t bits = 0;
        bool repeated = false;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            require_index(idx[i], m);
            if (i > 0 && idx[i] == idx[i - 1]) repeated = true;
            bits |= std::uint32_t{1} << (idx[i] - 1);
        }
        if (repeated) continue;  // squares of generators vanish
        out.add_term(Monomial{bits}, (swaps & 1) ? -coeff : coeff);
    }
    return out;
}

Parity GrassmannElement::parity() const {
    bool has_even = false, has_odd = false;
    for (const auto& [mono, c] : terms_) {
        (mono.degree() & 1 ? has_odd : has_even) = true;
    }
    if (has_even && has_odd) return Parity::Mixed;
    if (has_odd) return Parity::Odd;
    return Parity::Even;  // zero counts as even
}

Rational GrassmannElement::body() const {
    auto it = terms_.find(Monomial{0});
    return it == terms_.end() ? Rational(0) : it->second;
}

GrassmannElement GrassmannElement::soul() const {
    GrassmannElement out = *this;
    out.terms_.erase(Monomial{0});
    return out;
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement out(num_generators_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
    require_same_algebra(*this, o, "add");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
    GrassmannElement out = a;
    out += b;
    return out;
}

GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
    return a + (-b);
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
    GrassmannElement::require_same_algebra(a, b, "multiply");
    GrassmannElement out(a.num_generators_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            int sign = product_sign(ma, mb);
            if (sign == 0) continue;
            Rational c = ca * cb;
            out.add_term(Monomial{ma.bits | mb.bits}, sign < 0 ? -c : c);
        }
    }
    return out;
}

GrassmannElement operator*(const Rational& c, const GrassmannElement& a) {
    GrassmannElement out(a.num_generators_);
    if (c.is_zero()) return out;
    for (const auto& [mono, coeff] : a.terms_) out.terms_.emplace(mono, c * coeff);
    return out;
}

void GrassmannElement::add_term(Monomial mono, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GrassmannElement::require_same_algebra(const GrassmannElement& a, const GrassmannElement& b,
                                            const char* op) {
    if (a.num_generators_ != b.num_generators_)
        throw std::invalid_argument(std::string(op) + ": generator count mismatch (" +
                                    std::to_string(a.num_generators_) + " vs " +
                                    std::to_string(b.num_generators_) + ")");
}

std::pair<Rational, GrassmannElement> body_soul(const GrassmannElement& a) {
    return {a.body(), a.soul()};
}

GrassmannElement invert_even(const GrassmannElement& a) {
    if (a.parity() != Parity::Even)
        throw std::domain_error(std::string("invert_even: element has parity ") +
                                to_string(a.parity()) + ", expected Even");
    Rational b = a.body();
    if (b.is_zero()) throw std::domain_error("invert_even: zero body, element is not a unit");
    // a = b + s with s nilpotent of degree >= 2 per factor, so
    // a^-1 = (1/b) * sum_{k=0}^{m/2} (-s/b)^k with the series exact.
    const int m = a.generators();
    const Rational neg_binv = Rational(-1) / b;
    GrassmannElement soul = a.soul();
    GrassmannElement term = GrassmannElement::constant(m, Rational(1) / b);
    GrassmannElement result = term;
    for (int k = 1; k <= m / 2; ++k) {
        term = neg_binv * (term * soul);
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

AlgebraHom::AlgebraHom(int source_generators, int target_generators,
                       std::vector<GrassmannElement> images)
    : source_(source_generators), target_(target_generators), images_(std::move(images)) {
    require_generator_count(source_);
    require_generator_count(target_);
    if (static_cast<int>(images_.size()) != source_)
        throw std::invalid_argument("AlgebraHom: expected " + std::to_string(source_) +
                                    " generator images, got " + std::to_string(images_.size()));
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const auto& img = images_[i];
        if (img.generators() != target_)
            throw std::invalid_argument("AlgebraHom: image of generator " + std::to_string(i + 1) +
                                        " lives over " + std::to_string(img.generators()) +
                                        " generators, expected " + std::to_string(target_));
        if (!img.is_zero() && img.parity() != Parity::Odd)
            throw std::invalid_argument("AlgebraHom: image of generator " + std::to_string(i + 1) +
                                        " is not odd (parity preservation)");
    }
}

GrassmannElement AlgebraHom::operator()(const GrassmannElement& a) const {
    if (a.generators() != source_)
        throw std::invalid_argument("AlgebraHom: element over " + std::to_string(a.generators()) +
                                    " generators, hom source has " + std::to_string(source_));
    GrassmannElement out(target_);
    for (const auto& [mono, c] : a.terms()) {
        GrassmannElement image = GrassmannElement::constant(target_, c);
        for (int index : mono.indices()) image = image * images_[index - 1];
        out += image;
    }
    return out;
}

AlgebraHom identity_hom(int m) {
    std::vector<GrassmannElement> images;
    images.reserve(m);
    for (int i = 1; i <= m; ++i) images.push_back(GrassmannElement::generator(m, i));
    return AlgebraHom(m, m, std::move(images));
}

AlgebraHom compose(const AlgebraHom& after, const AlgebraHom& before) {
    if (before.target_generators() != after.source_generators())
        throw std::invalid_argument("compose: inner target does not match outer source");
    std::vector<GrassmannElement> images;
    images.reserve(before.images().size());
    for (const auto& img : before.images()) images.push_back(after(img));
    return AlgebraHom(before.source_generators(), after.target_generators(), std::move(images));
}

}  // namespace superheap
