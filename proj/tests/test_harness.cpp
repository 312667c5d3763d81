#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "superheap/element_io.hpp"
#include "superheap/harness.hpp"

using namespace superheap;

namespace {

const SuperDomain kR11{1, 1};
const SuperDomain kR01{0, 1};

SampleConfig cfg_with(int trials, std::uint64_t seed = 42, int m = 4) {
    SampleConfig cfg;
    cfg.trials = trials;
    cfg.rng_seed = seed;
    cfg.generators = m;
    return cfg;
}

}  // namespace

TEST_CASE("the canonical suite passes") {
    auto reports = run_suite({"all"}, cfg_with(40));
    CHECK(all_passed(reports));
    bool saw_reduced = false, saw_full = false;
    for (const auto& r : reports) {
        CHECK(r.trials_run + r.skipped == r.config.trials);
        CHECK(r.skipped == 0);
        CHECK_FALSE(r.counterexample.has_value());
        saw_reduced = saw_reduced || r.config.generators == 0;
        saw_full = saw_full || r.config.generators == 4;
    }
    // the degenerate probe m = 0 rides along with every suite run
    CHECK(saw_reduced);
    CHECK(saw_full);
}

TEST_CASE("reports are deterministic") {
    SampleConfig cfg = cfg_with(30, 7);
    auto a = run_suite({"para-assoc:mult-heap", "roundtrip:trans-group"}, cfg);
    auto b = run_suite({"para-assoc:mult-heap", "roundtrip:trans-group"}, cfg);
    CHECK(render_text(a) == render_text(b));
    CHECK(render_json(a) == render_json(b));
    auto c = run_suite({"para-assoc:mult-heap", "roundtrip:trans-group"}, cfg_with(30, 8));
    CHECK(render_json(a) != render_json(c));  // seed participates
}

TEST_CASE("selection errors") {
    SampleConfig cfg = cfg_with(5);
    CHECK_THROWS_AS(run_suite({}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_suite({"nonsense:foo"}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_suite({"para-assoc:not-a-structure"}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_suite({"para-assoc"}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_suite({"para-assoc:trans-group"}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_suite({"group-axioms:trans-heap"}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_suite({"closed-form:r01-heap"}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_suite({"roundtrip:r01-semiheap"}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_suite({"ternary-hom:trans-heap/"}, cfg), std::invalid_argument);
}

TEST_CASE("semiheap fails the heap axioms with the canonical counterexample") {
    auto report = check_heap_axioms(r01_semiheap(), cfg_with(200));
    CHECK_FALSE(report.passed);
    CHECK(report.trials_run == 1);  // first trial is the edge tuple
    REQUIRE(report.counterexample.has_value());
    const auto& cx = *report.counterexample;
    REQUIRE(cx.inputs.size() == 2);
    CHECK(cx.inputs[0] == "(e1)");
    CHECK(cx.inputs[1] == "(0)");
    CHECK(cx.lhs == "(2*e1)");
    CHECK(cx.rhs == "(0)");

    // the counterexample re-evaluates standalone
    SuperPoint x = parse_point(cx.inputs[0], kR01, 4);
    SuperPoint y = parse_point(cx.inputs[1], kR01, 4);
    SuperPoint lhs = r01_semiheap().bracket(x, x, y);
    CHECK(format_point(lhs) == cx.lhs);
    CHECK(format_point(y) == cx.rhs);
    CHECK(lhs != y);
}

TEST_CASE("r01 structures separate heap from semiheap") {
    SampleConfig cfg = cfg_with(100);
    CHECK(check_heap_axioms(r01_heap().ternary, cfg).passed);
    CHECK(check_para_associativity(r01_semiheap(), cfg).passed);
    CHECK(check_para_associativity(r01_heap().ternary, cfg).passed);
}

TEST_CASE("closed-form heaps satisfy their laws at every probe size") {
    CHECK(check_para_associativity(trans_heap().ternary, cfg_with(200, 42, 3)).passed);
    for (int m = 0; m <= 4; ++m) {
        SampleConfig cfg = cfg_with(40, 42, m);
        CHECK(check_para_associativity(trans_heap().ternary, cfg).passed);
        CHECK(check_para_associativity(mult_heap().ternary, cfg).passed);
        CHECK(check_heap_axioms(trans_heap().ternary, cfg).passed);
        CHECK(check_heap_axioms(mult_heap().ternary, cfg).passed);
    }
}

TEST_CASE("broken bracket fails para-associativity reproducibly") {
    SampleConfig cfg = cfg_with(200);
    auto r1 = check_para_associativity(broken_bracket(), cfg);
    auto r2 = check_para_associativity(broken_bracket(), cfg);
    CHECK_FALSE(r1.passed);
    REQUIRE(r1.counterexample.has_value());
    REQUIRE(r2.counterexample.has_value());
    CHECK(r1.counterexample->inputs == r2.counterexample->inputs);
    CHECK(r1.counterexample->lhs == r2.counterexample->lhs);

    // soundness: recompute the three bracketings from the recorded inputs
    const auto& cx = *r1.counterexample;
    REQUIRE(cx.inputs.size() == 5);
    std::vector<SuperPoint> p;
    for (const auto& text : cx.inputs) p.push_back(parse_point(text, kR11, cfg.generators));
    auto h = broken_bracket();
    SuperPoint left = h.bracket(h.bracket(p[0], p[1], p[2]), p[3], p[4]);
    SuperPoint middle = h.bracket(p[0], h.bracket(p[3], p[2], p[1]), p[4]);
    SuperPoint right = h.bracket(p[0], p[1], h.bracket(p[2], p[3], p[4]));
    CHECK(format_point(left) == cx.lhs);
    bool mismatch_recorded =
        (left != middle && format_point(middle) == cx.rhs) ||
        (left == middle && left != right && format_point(right) == cx.rhs);
    CHECK(mismatch_recorded);
}

TEST_CASE("group axioms hold for built-in and derived groups") {
    SampleConfig cfg = cfg_with(80);
    CHECK(check_group_axioms(trans_group(), cfg).passed);
    CHECK(check_group_axioms(mult_group(), cfg).passed);
    CHECK(check_group_axioms(groupify(r01_heap()), cfg).passed);
    // groupifying the non-heap semiheap does not produce a group
    auto bad = check_group_axioms(
        groupify_at(r01_semiheap(), SuperPoint::constant(kR01, cfg.generators, {})), cfg);
    CHECK_FALSE(bad.passed);
}

TEST_CASE("hom fixtures behave as advertised") {
    SampleConfig cfg = cfg_with(100);
    auto th = trans_heap().ternary;
    auto tg = trans_group();

    CHECK(check_ternary_hom(th, th, translation_scaling_endo(Rational(2)), cfg).passed);
    CHECK(check_ternary_hom(th, th, translation_shift_map(Rational(5)), cfg).passed);
    CHECK(check_group_hom(tg, tg, translation_scaling_endo(Rational(2)), cfg).passed);
    CHECK(check_group_hom(tg, tg, translation_scaling_endo(Rational(0)), cfg).passed);

    // the even-squaring map respects parity but not the bracket
    auto sq = check_ternary_hom(th, th, translation_square_map(), cfg);
    CHECK_FALSE(sq.passed);

    // the shift moves the identity: not a group endomorphism
    auto shift = check_group_hom(tg, tg, translation_shift_map(Rational(5)), cfg);
    CHECK_FALSE(shift.passed);
    REQUIRE(shift.counterexample.has_value());
    CHECK(shift.counterexample->inputs == std::vector<std::string>{"(0; 0)"});
    CHECK(shift.counterexample->lhs == "(5; 0)");
    CHECK(shift.counterexample->rhs == "(0; 0)");

    // multiplicative analog: unit scaling is a bracket endo, not pointed
    auto mh = mult_heap().ternary;
    auto mg = mult_group();
    CHECK(check_ternary_hom(mh, mh, mult_unit_scale(Rational(2)), cfg).passed);
    CHECK_FALSE(check_group_hom(mg, mg, mult_unit_scale(Rational(2)), cfg).passed);
    CHECK(check_group_hom(mg, mg, mult_parity_flip(), cfg).passed);

    // domain mismatch is a usage error
    CHECK_THROWS_AS(check_ternary_hom(r01_heap().ternary, r01_heap().ternary,
                                      translation_shift_map(Rational(1)), cfg),
                    std::invalid_argument);
}

TEST_CASE("naturality holds for every built-in structure") {
    SampleConfig cfg = cfg_with(60);
    for (const auto& name : {"r01-semiheap", "r01-heap", "trans-group", "trans-heap",
                             "mult-group", "mult-heap"}) {
        for (const auto& [label, hom] : naturality_homs(cfg.generators)) {
            auto report = check_naturality(name, label, hom, cfg);
            INFO(report.selector());
            CHECK(report.passed);
        }
    }
    CHECK_THROWS_AS(
        check_naturality("trans-group", "incl", resolve_naturality_hom("incl", 3), cfg_with(5)),
        std::invalid_argument);
}

TEST_CASE("roundtrips and closed forms") {
    SampleConfig cfg = cfg_with(60);
    for (const auto& name :
         {"trans-group", "mult-group", "r01-heap", "trans-heap", "mult-heap"}) {
        auto report = check_roundtrip(name, cfg);
        INFO(report.selector());
        CHECK(report.passed);
    }
    CHECK(check_closed_form("trans-heap", cfg).passed);
    CHECK(check_closed_form("mult-heap", cfg).passed);
}

TEST_CASE("partial operations are counted as skips") {
    // mult bracket sampled without the unit guarantee: zero-body middle
    // points throw and must be skipped, evaluated trials still pass
    TernaryStructure leaky = mult_heap().ternary;
    leaky.requires_units = false;
    SampleConfig cfg = cfg_with(150, 11);
    auto report = check_heap_axioms(leaky, cfg);
    CHECK(report.passed);
    CHECK(report.skipped > 0);
    CHECK(report.trials_run + report.skipped == cfg.trials);
}

TEST_CASE("renderers") {
    SampleConfig cfg = cfg_with(5);
    auto fail_report = check_heap_axioms(r01_semiheap(), cfg);
    auto pass_report = check_heap_axioms(r01_heap().ternary, cfg);
    std::string text = render_text({pass_report, fail_report});
    CHECK(text.find("PASS heap-axioms:r01-heap m=4 trials=5 skipped=0 seed=42") !=
          std::string::npos);
    CHECK(text.find("FAIL heap-axioms:r01-semiheap m=4 trials=1 skipped=0 seed=42") !=
          std::string::npos);
    CHECK(text.find("counterexample heap-axioms:r01-semiheap") != std::string::npos);
    CHECK(text.find("  lhs: (2*e1)") != std::string::npos);

    const std::string expected_json = R"json([
  {
    "suite": "heap-axioms:r01-semiheap",
    "structure": "r01-semiheap",
    "m": 4,
    "trials": 1,
    "skipped": 0,
    "seed": 42,
    "passed": false,
    "counterexample": {
      "inputs": [
        "(e1)",
        "(0)"
      ],
      "lhs": "(2*e1)",
      "rhs": "(0)"
    }
  }
]
)json";
    CHECK(render_json({fail_report}) == expected_json);

    const std::string pass_json = render_json({pass_report});
    CHECK(pass_json.find("\"passed\": true") != std::string::npos);
    CHECK(pass_json.find("\"counterexample\": null") != std::string::npos);
}

TEST_CASE("fixture selectors expand and restrict") {
    SampleConfig cfg = cfg_with(30);
    // 4 default fixtures, each at m = 0 and m = 4
    auto defaults = run_suite({"ternary-hom:trans-heap"}, cfg);
    CHECK(defaults.size() == 8);
    CHECK(all_passed(defaults));
    auto single = run_suite({"group-hom:trans-group/shift(5)"}, cfg);
    REQUIRE(single.size() == 2);
    CHECK_FALSE(single[0].passed);  // the shift moves the identity at m = 0 too
    CHECK_FALSE(single[1].passed);
    CHECK(single[1].structure == "trans-group/shift(5)");
    auto natural = run_suite({"naturality:mult-heap/composite"}, cfg);
    REQUIRE(natural.size() == 2);
    CHECK(all_passed(natural));
}
