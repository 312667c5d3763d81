#include "superheap/functors.hpp"

#include <stdexcept>
#include <utility>

namespace superheap {

PointedTernaryStructure heapify(const GroupStructure& g) {
    GroupStructure grp = g;
    return PointedTernaryStructure{
        TernaryStructure{
            "heapify:" + g.name,
            g.domain,
            true,
            g.requires_units,
            [grp](const SuperPoint& x, const SuperPoint& y, const SuperPoint& z) {
                return grp.mul(x, grp.mul(grp.inv(y), z));
            },
        },
        g.identity,
    };
}

GroupStructure groupify(const PointedTernaryStructure& h) {
    TernaryStructure t = h.ternary;
    PointFactory base = h.basepoint;
    return GroupStructure{
        "groupify:" + t.name,
        t.domain,
        t.requires_units,
        [t, base](const SuperPoint& x, const SuperPoint& y) {
            return t.bracket(x, base(x.generators()), y);
        },
        [t, base](const SuperPoint& x) {
            SuperPoint e = base(x.generators());
            return t.bracket(e, x, e);
        },
        base,
    };
}

GroupStructure groupify_at(const TernaryStructure& t, const SuperPoint& basepoint) {
    TernaryStructure tern = t;
    SuperPoint base = basepoint;
    PointFactory identity = [base](int m) {
        if (m != base.generators())
            throw std::invalid_argument(
                "groupify_at: basepoint fixed at " + std::to_string(base.generators()) +
                " generators, requested " + std::to_string(m));
        return base;
    };
    return GroupStructure{
        "groupify-at:" + t.name,
        t.domain,
        t.requires_units,
        [tern, base](const SuperPoint& x, const SuperPoint& y) { return tern.bracket(x, base, y); },
        [tern, base](const SuperPoint& x) { return tern.bracket(base, x, base); },
        std::move(identity),
    };
}

namespace {

constexpr SuperDomain kOddLine{0, 1};
constexpr SuperDomain kLine11{1, 1};

PointMap line11_map(std::string name,
                    std::function<SuperPoint(const SuperPoint&)> action) {
    return PointMap{std::move(name), kLine11, kLine11, std::move(action)};
}

}  // namespace

PointMap identity_map(SuperDomain domain) {
    return PointMap{"id", domain, domain, [](const SuperPoint& p) { return p; }};
}

PointMap translation_scaling_endo(const Rational& b) {
    Rational b2 = b * b;
    return line11_map("scale(" + b.to_string() + ")", [b, b2](const SuperPoint& p) {
        return SuperPoint(p.domain(), p.generators(), {b2 * p.even(0)}, {b * p.odd(0)});
    });
}

PointMap translation_shift_map(const Rational& c) {
    return line11_map("shift(" + c.to_string() + ")", [c](const SuperPoint& p) {
        GrassmannElement shift = GrassmannElement::constant(p.generators(), c);
        return SuperPoint(p.domain(), p.generators(), {p.even(0) + shift}, {p.odd(0)});
    });
}

PointMap translation_square_map() {
    return line11_map("sq", [](const SuperPoint& p) {
        return SuperPoint(p.domain(), p.generators(), {p.even(0) * p.even(0)}, {p.odd(0)});
    });
}

PointMap odd_scaling_map(const Rational& b) {
    return PointMap{"oscale(" + b.to_string() + ")", kOddLine, kOddLine,
                    [b](const SuperPoint& p) {
                        return SuperPoint(p.domain(), p.generators(), {}, {b * p.odd(0)});
                    }};
}

PointMap mult_parity_flip() {
    return line11_map("flip", [](const SuperPoint& p) {
        return SuperPoint(p.domain(), p.generators(), {p.even(0)}, {-p.odd(0)});
    });
}

PointMap mult_unit_scale(const Rational& c) {
    if (c.is_zero()) throw std::invalid_argument("mult_unit_scale: scale must be nonzero");
    return line11_map("uscale(" + c.to_string() + ")", [c](const SuperPoint& p) {
        return SuperPoint(p.domain(), p.generators(), {c * p.even(0)}, {c * p.odd(0)});
    });
}

}  // namespace superheap
