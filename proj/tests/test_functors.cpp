#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "superheap/functors.hpp"
#include "superheap/harness.hpp"

using namespace superheap;

namespace {

const SuperDomain kR11{1, 1};
const SuperDomain kR01{0, 1};

GrassmannElement gen(int m, int i) { return GrassmannElement::generator(m, i); }

SampleConfig small_cfg() {
    SampleConfig cfg;
    cfg.trials = 60;
    return cfg;
}

}  // namespace

TEST_CASE("heapified groups match the closed-form brackets") {
    SampleConfig cfg = small_cfg();
    PointedTernaryStructure ht = heapify(trans_group());
    CHECK(ht.ternary.name == "heapify:trans-group");
    CHECK(ht.ternary.claims_heap);
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        SuperPoint a = sample_point(kR11, false, 4, cfg, rng);
        SuperPoint b = sample_point(kR11, false, 4, cfg, rng);
        SuperPoint c = sample_point(kR11, false, 4, cfg, rng);
        CHECK(ht.ternary.bracket(a, b, c) == trans_heap_closed_form(a, b, c));
        CHECK(ht.ternary.bracket(a, a, b) == b);
    }

    PointedTernaryStructure hm = heapify(mult_group());
    CHECK(hm.ternary.requires_units);
    for (int t = 0; t < 50; ++t) {
        SuperPoint a = sample_point(kR11, true, 4, cfg, rng);
        SuperPoint b = sample_point(kR11, true, 4, cfg, rng);
        SuperPoint c = sample_point(kR11, true, 4, cfg, rng);
        CHECK(hm.ternary.bracket(a, b, c) == mult_heap_closed_form(a, b, c));
        CHECK(hm.ternary.bracket(a, a, b) == b);
    }
}

TEST_CASE("groupified heaps recover the group operations") {
    SampleConfig cfg = small_cfg();
    GroupStructure g1 = groupify(heapify(trans_group()));
    GroupStructure g2 = groupify(heapify(mult_group()));
    Rng rng(6);
    for (int t = 0; t < 50; ++t) {
        SuperPoint a = sample_point(kR11, false, 4, cfg, rng);
        SuperPoint b = sample_point(kR11, false, 4, cfg, rng);
        CHECK(g1.mul(a, b) == trans_mul(a, b));
        CHECK(g1.inv(a) == trans_inv(a));
        SuperPoint u = sample_point(kR11, true, 4, cfg, rng);
        SuperPoint v = sample_point(kR11, true, 4, cfg, rng);
        CHECK(g2.mul(u, v) == mult_mul(u, v));
        CHECK(g2.inv(u) == mult_inv(u));
    }
    CHECK(g1.identity(4) == trans_group().identity(4));
    CHECK(g2.identity(4) == mult_group().identity(4));
}

TEST_CASE("groupified odd-line heap adds odd components") {
    const int m = 3;
    GroupStructure g = groupify(r01_heap());
    SuperPoint t1(kR01, m, {}, {gen(m, 1)});
    SuperPoint t2(kR01, m, {}, {gen(m, 2)});
    CHECK(g.mul(t1, t2) == SuperPoint(kR01, m, {}, {gen(m, 1) + gen(m, 2)}));
    CHECK(g.inv(t1) == SuperPoint(kR01, m, {}, {Rational(-1) * gen(m, 1)}));
    CHECK(g.identity(m) == SuperPoint::constant(kR01, m, {}));
}

TEST_CASE("translation scaling endomorphism") {
    const int m = 2;
    PointMap id = translation_scaling_endo(Rational(1));
    SuperPoint p(kR11, m, {GrassmannElement::constant(m, Rational(3))}, {gen(m, 1)});
    CHECK(id.action(p) == p);

    PointMap s2 = translation_scaling_endo(Rational(2));
    SuperPoint a(kR11, m, {GrassmannElement::constant(m, Rational(1))}, {gen(m, 1)});
    SuperPoint b(kR11, m, {GrassmannElement::constant(m, Rational(1))}, {gen(m, 2)});
    SuperPoint lhs = s2.action(trans_mul(a, b));
    SuperPoint rhs = trans_mul(s2.action(a), s2.action(b));
    SuperPoint expected(kR11, m,
                        {GrassmannElement::constant(m, Rational(8)) +
                         Rational(4) * (gen(m, 1) * gen(m, 2))},
                        {Rational(2) * gen(m, 1) + Rational(2) * gen(m, 2)});
    CHECK(lhs == expected);
    CHECK(rhs == expected);

    PointMap s0 = translation_scaling_endo(Rational(0));
    CHECK(s0.action(p) == SuperPoint::constant(kR11, m, {Rational(0)}));
}

TEST_CASE("translation shift map") {
    const int m = 2;
    PointMap c0 = translation_shift_map(Rational(0));
    SuperPoint p(kR11, m, {GrassmannElement::constant(m, Rational(3))}, {gen(m, 1)});
    CHECK(c0.action(p) == p);

    PointMap c5 = translation_shift_map(Rational(5));
    SampleConfig cfg = small_cfg();
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        SuperPoint a = sample_point(kR11, false, m, cfg, rng);
        SuperPoint b = sample_point(kR11, false, m, cfg, rng);
        SuperPoint c = sample_point(kR11, false, m, cfg, rng);
        // the three shifts cancel inside the bracket
        CHECK(c5.action(trans_heap_closed_form(a, b, c)) ==
              trans_heap_closed_form(c5.action(a), c5.action(b), c5.action(c)));
    }
    SuperPoint e = SuperPoint::constant(kR11, m, {Rational(0)});
    CHECK(c5.action(e) == SuperPoint::constant(kR11, m, {Rational(5)}));
    CHECK(c5.action(e) != e);
}

TEST_CASE("groupify_at an arbitrary basepoint") {
    const int m = 2;
    SuperPoint base(kR01, m, {}, {gen(m, 1)});
    GroupStructure g = groupify_at(r01_heap().ternary, base);
    SuperPoint x(kR01, m, {}, {gen(m, 2)});
    SuperPoint y(kR01, m, {}, {gen(m, 1) + gen(m, 2)});
    // x * y = x - base + y
    CHECK(g.mul(x, y) == SuperPoint(kR01, m, {}, {Rational(2) * gen(m, 2)}));
    CHECK(g.mul(x, g.identity(m)) == x);
    CHECK(g.mul(g.identity(m), x) == x);
    CHECK(g.mul(x, g.inv(x)) == base);
    CHECK(g.mul(g.inv(x), x) == base);
    CHECK_THROWS_AS(g.identity(m + 1), std::invalid_argument);
}

TEST_CASE("registry resolves built-ins and derived names") {
    CHECK(resolve_structure("trans-group").is_group());
    CHECK(resolve_structure("r01-semiheap").is_ternary());
    CHECK_FALSE(resolve_structure("r01-semiheap").is_pointed());
    CHECK(resolve_structure("r01-heap").is_pointed());
    CHECK(resolve_structure("heapify:trans-group").is_pointed());
    CHECK(resolve_structure("groupify:heapify:mult-group").is_group());
    CHECK(resolve_structure("groupify:r01-heap").name() == "groupify:r01-heap");
    CHECK_THROWS_AS(resolve_structure("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_structure("heapify:r01-heap"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_structure("groupify:trans-group"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_structure("groupify:r01-semiheap"), std::invalid_argument);
}

TEST_CASE("registry resolves fixtures by family") {
    CHECK(resolve_point_map("trans-heap", "scale(2)").name == "scale(2)");
    CHECK(resolve_point_map("heapify:trans-group", "shift(-3/2)").name == "shift(-3/2)");
    CHECK(resolve_point_map("mult-heap", "uscale(2)").name == "uscale(2)");
    CHECK(resolve_point_map("r01-heap", "oscale(1/2)").name == "oscale(1/2)");
    CHECK(resolve_point_map("trans-group", "id").name == "id");
    CHECK_THROWS_AS(resolve_point_map("trans-heap", "flip"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_point_map("mult-heap", "scale(2)"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_point_map("trans-heap", "scale(x)"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_point_map("trans-heap", "scale"), std::invalid_argument);
}

TEST_CASE("naturality homs have the advertised shapes") {
    auto homs = naturality_homs(4);
    REQUIRE(homs.size() == 3);
    CHECK(homs[0].first == "incl");
    CHECK(homs[0].second.target_generators() == 5);
    CHECK(homs[1].first == "twist");
    CHECK(homs[1].second.target_generators() == 4);
    // the composite hom really has a composite image
    bool has_composite = false;
    for (const auto& img : homs[2].second.images())
        for (const auto& [mono, c] : img.terms())
            if (mono.degree() >= 3) has_composite = true;
    CHECK(has_composite);
    CHECK_THROWS_AS(resolve_naturality_hom("unknown", 4), std::invalid_argument);
}
