#include "superheap/structures.hpp"

#include <stdexcept>

namespace superheap {

namespace {

constexpr SuperDomain kOddLine{0, 1};
constexpr SuperDomain kLine11{1, 1};

void require_point(const SuperPoint& p, SuperDomain domain, int num_generators, const char* op) {
    if (p.domain() != domain)
        throw std::invalid_argument(std::string(op) + ": point of domain " +
                                    p.domain().to_string() + ", expected " + domain.to_string());
    if (p.generators() != num_generators)
        throw std::invalid_argument(std::string(op) + ": generator count mismatch (" +
                                    std::to_string(p.generators()) + " vs " +
                                    std::to_string(num_generators) + ")");
}

void require_unit(const SuperPoint& p, const char* op) {
    if (p.even(0).body().is_zero())
        throw std::domain_error(std::string(op) + ": even component has zero body, not a unit");
}

}  // namespace

SuperPoint r01_bracket(TernaryVariant variant, const SuperPoint& a, const SuperPoint& b,
                       const SuperPoint& c) {
    const int m = a.generators();
    require_point(a, kOddLine, m, "r01 bracket");
    require_point(b, kOddLine, m, "r01 bracket");
    require_point(c, kOddLine, m, "r01 bracket");
    GrassmannElement mid = variant == TernaryVariant::PlusMinusPlus ? -b.odd(0) : b.odd(0);
    return SuperPoint(kOddLine, m, {}, {a.odd(0) + mid + c.odd(0)});
}

SuperPoint trans_mul(const SuperPoint& a, const SuperPoint& b) {
    const int m = a.generators();
    require_point(a, kLine11, m, "trans mul");
    require_point(b, kLine11, m, "trans mul");
    const auto &x1 = a.even(0), &t1 = a.odd(0), &x2 = b.even(0), &t2 = b.odd(0);
    return SuperPoint(kLine11, m, {x1 + x2 + t1 * t2}, {t1 + t2});
}

SuperPoint trans_inv(const SuperPoint& a) {
    const int m = a.generators();
    require_point(a, kLine11, m, "trans inv");
    return SuperPoint(kLine11, m, {-a.even(0)}, {-a.odd(0)});
}

SuperPoint trans_heap_closed_form(const SuperPoint& a, const SuperPoint& b, const SuperPoint& c) {
    const int m = a.generators();
    require_point(a, kLine11, m, "trans bracket");
    require_point(b, kLine11, m, "trans bracket");
    require_point(c, kLine11, m, "trans bracket");
    const auto &x1 = a.even(0), &t1 = a.odd(0);
    const auto &x2 = b.even(0), &t2 = b.odd(0);
    const auto &x3 = c.even(0), &t3 = c.odd(0);
    return SuperPoint(kLine11, m, {x1 - x2 + x3 - t1 * t2 + t1 * t3 - t2 * t3},
                      {t1 - t2 + t3});
}

SuperPoint mult_mul(const SuperPoint& a, const SuperPoint& b) {
    const int m = a.generators();
    require_point(a, kLine11, m, "mult mul");
    require_point(b, kLine11, m, "mult mul");
    require_unit(a, "mult mul");
    require_unit(b, "mult mul");
    const auto &x1 = a.even(0), &t1 = a.odd(0), &x2 = b.even(0), &t2 = b.odd(0);
    return SuperPoint(kLine11, m, {x1 * x2 + t1 * t2}, {x1 * t2 + t1 * x2});
}

SuperPoint mult_inv(const SuperPoint& a) {
    const int m = a.generators();
    require_point(a, kLine11, m, "mult inv");
    require_unit(a, "mult inv");
    GrassmannElement xi = invert_even(a.even(0));
    return SuperPoint(kLine11, m, {xi}, {-(xi * xi * a.odd(0))});
}

SuperPoint mult_heap_closed_form(const SuperPoint& a, const SuperPoint& b, const SuperPoint& c) {
    const int m = a.generators();
    require_point(a, kLine11, m, "mult bracket");
    require_point(b, kLine11, m, "mult bracket");
    require_point(c, kLine11, m, "mult bracket");
    require_unit(b, "mult bracket");
    const auto &x1 = a.even(0), &t1 = a.odd(0);
    const auto &t2 = b.odd(0);
    const auto &x3 = c.even(0), &t3 = c.odd(0);
    GrassmannElement d = invert_even(b.even(0));   // 1/x2
    GrassmannElement d2 = d * d;                   // 1/x2^2
    GrassmannElement even =
        x1 * x3 * d - t1 * t2 * x3 * d2 - x1 * t2 * t3 * d2 + t1 * t3 * d;
    GrassmannElement odd =
        x1 * t3 * d - t1 * t2 * t3 * d2 - x1 * t2 * x3 * d2 + t1 * x3 * d;
    return SuperPoint(kLine11, m, {even}, {odd});
}

GroupStructure trans_group() {
    return GroupStructure{
        "trans-group",
        kLine11,
        false,
        [](const SuperPoint& a, const SuperPoint& b) { return trans_mul(a, b); },
        [](const SuperPoint& a) { return trans_inv(a); },
        [](int m) { return SuperPoint::constant(kLine11, m, {Rational(0)}); },
    };
}

GroupStructure mult_group() {
    return GroupStructure{
        "mult-group",
        kLine11,
        true,
        [](const SuperPoint& a, const SuperPoint& b) { return mult_mul(a, b); },
        [](const SuperPoint& a) { return mult_inv(a); },
        [](int m) { return SuperPoint::constant(kLine11, m, {Rational(1)}); },
    };
}

TernaryStructure r01_semiheap() {
    return TernaryStructure{
        "r01-semiheap",
        kOddLine,
        false,
        false,
        [](const SuperPoint& a, const SuperPoint& b, const SuperPoint& c) {
            return r01_bracket(TernaryVariant::PlusPlusPlus, a, b, c);
        },
    };
}

PointedTernaryStructure r01_heap() {
    return PointedTernaryStructure{
        TernaryStructure{
            "r01-heap",
            kOddLine,
            true,
            false,
            [](const SuperPoint& a, const SuperPoint& b, const SuperPoint& c) {
                return r01_bracket(TernaryVariant::PlusMinusPlus, a, b, c);
            },
        },
        [](int m) { return SuperPoint::constant(kOddLine, m, {}); },
    };
}

PointedTernaryStructure trans_heap() {
    return PointedTernaryStructure{
        TernaryStructure{
            "trans-heap",
            kLine11,
            true,
            false,
            [](const SuperPoint& a, const SuperPoint& b, const SuperPoint& c) {
                return trans_heap_closed_form(a, b, c);
            },
        },
        [](int m) { return SuperPoint::constant(kLine11, m, {Rational(0)}); },
    };
}

PointedTernaryStructure mult_heap() {
    return PointedTernaryStructure{
        TernaryStructure{
            "mult-heap",
            kLine11,
            true,
            true,
            [](const SuperPoint& a, const SuperPoint& b, const SuperPoint& c) {
                return mult_heap_closed_form(a, b, c);
            },
        },
        [](int m) { return SuperPoint::constant(kLine11, m, {Rational(1)}); },
    };
}

TernaryStructure broken_bracket() {
    return TernaryStructure{
        "broken-bracket",
        kLine11,
        false,
        false,
        [](const SuperPoint& a, const SuperPoint& b, const SuperPoint& c) {
            return trans_mul(a, trans_mul(b, c));
        },
    };
}

}  // namespace superheap
