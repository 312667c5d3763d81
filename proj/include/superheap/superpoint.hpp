#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "superheap/grassmann.hpp"

namespace superheap {

/// Shape p|q of a model superspace: p even and q odd coordinates.
struct SuperDomain {
    int even_dim = 0;
    int odd_dim = 0;

    friend bool operator==(SuperDomain a, SuperDomain b) {
        return a.even_dim == b.even_dim && a.odd_dim == b.odd_dim;
    }
    friend bool operator!=(SuperDomain a, SuperDomain b) { return !(a == b); }

    std::string to_string() const {
        return "(" + std::to_string(even_dim) + "|" + std::to_string(odd_dim) + ")";
    }
};

/// A probe-valued point of the superspace: one even-parity element per
/// even coordinate and one odd-parity element per odd coordinate, all
/// over the same generator count. Zero is accepted in either kind of slot.
class SuperPoint {
public:
    SuperPoint(SuperDomain domain, int num_generators, std::vector<GrassmannElement> evens,
               std::vector<GrassmannElement> odds);

    /// Point whose even coordinates are rational constants and whose odd
    /// coordinates are zero.
    static SuperPoint constant(SuperDomain domain, int num_generators,
                               const std::vector<Rational>& values);

    SuperDomain domain() const { return domain_; }
    int generators() const { return num_generators_; }
    const GrassmannElement& even(int i) const { return evens_[static_cast<std::size_t>(i)]; }
    const GrassmannElement& odd(int i) const { return odds_[static_cast<std::size_t>(i)]; }
    const std::vector<GrassmannElement>& evens() const { return evens_; }
    const std::vector<GrassmannElement>& odds() const { return odds_; }

    friend bool operator==(const SuperPoint& a, const SuperPoint& b) {
        return a.domain_ == b.domain_ && a.num_generators_ == b.num_generators_ &&
               a.evens_ == b.evens_ && a.odds_ == b.odds_;
    }
    friend bool operator!=(const SuperPoint& a, const SuperPoint& b) { return !(a == b); }

private:
    SuperDomain domain_;
    int num_generators_;
    std::vector<GrassmannElement> evens_;
    std::vector<GrassmannElement> odds_;
};

/// Reparametrization action: applies the hom to every component. Fixes
/// every constant point and preserves parity slots.
SuperPoint map_point(const AlgebraHom& h, const SuperPoint& p);

/// Named pointwise map between fixed domains, parity-preserving.
struct PointMap {
    std::string name;
    SuperDomain source;
    SuperDomain target;
    std::function<SuperPoint(const SuperPoint&)> action;
};

/// Point text format: "(comp; comp; ...)" in the element grammar, even
/// slots first.
SuperPoint parse_point(std::string_view text, SuperDomain domain, int num_generators);
std::string format_point(const SuperPoint& p);

}  // namespace superheap
