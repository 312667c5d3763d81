#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "superheap/element_io.hpp"
#include "superheap/harness.hpp"

namespace {

using namespace superheap;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

struct CommonOpts {
    int generators = 4;
    int trials = 200;
    std::uint64_t seed = 42;
    std::string format = "text";
};

SampleConfig to_config(const CommonOpts& o) {
    SampleConfig cfg;
    cfg.generators = o.generators;
    cfg.trials = o.trials;
    cfg.rng_seed = o.seed;
    return cfg;
}

int run_verify(const CommonOpts& common, const std::string& suite) {
    auto reports = run_suite(split_list(suite), to_config(common));
    std::cout << (common.format == "json" ? render_json(reports) : render_text(reports));
    return all_passed(reports) ? 0 : 1;
}

int run_eval(const CommonOpts& common, const std::string& structure,
             const std::vector<std::string>& points, std::string op) {
    StructureRef ref = resolve_structure(structure);
    std::vector<SuperPoint> pts;
    pts.reserve(points.size());
    for (const auto& text : points)
        pts.push_back(parse_point(text, ref.domain(), common.generators));

    if (op.empty()) {
        if (ref.is_ternary())
            op = "bracket";
        else
            op = pts.size() == 1 ? "inv" : "mul";
    }
    auto need = [&](std::size_t n) {
        if (pts.size() != n)
            throw std::invalid_argument("op '" + op + "' needs " + std::to_string(n) +
                                        " --point arguments, got " + std::to_string(pts.size()));
    };
    SuperPoint result = [&] {
        if (op == "bracket") {
            if (!ref.is_ternary())
                throw std::invalid_argument("structure '" + structure +
                                            "' has no ternary bracket");
            need(3);
            return ref.ternary->bracket(pts[0], pts[1], pts[2]);
        }
        if (op == "mul") {
            if (!ref.is_group())
                throw std::invalid_argument("structure '" + structure +
                                            "' has no binary multiplication (try groupify:" +
                                            structure + ")");
            need(2);
            return ref.group->mul(pts[0], pts[1]);
        }
        if (op == "inv") {
            if (!ref.is_group())
                throw std::invalid_argument("structure '" + structure +
                                            "' has no inverse operation (try groupify:" +
                                            structure + ")");
            need(1);
            return ref.group->inv(pts[0]);
        }
        throw std::invalid_argument("unknown op '" + op + "' (mul, inv or bracket)");
    }();
    std::cout << format_point(result) << "\n";
    return 0;
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("demo expectation failed: " + what);
}

int run_demo(const CommonOpts& common) {
    SampleConfig cfg = to_config(common);
    const int m = cfg.generators;
    if (m < 2) throw std::invalid_argument("demo needs --generators >= 2");

    std::cout << "== Ternary structures on the odd line (0|1), m=" << m << " ==\n";
    auto semi = r01_semiheap();
    auto heap = r01_heap();
    SuperPoint g1(SuperDomain{0, 1}, m, {}, {GrassmannElement::generator(m, 1)});
    SuperPoint zero_pt = SuperPoint::constant(SuperDomain{0, 1}, m, {});
    SuperPoint plus = semi.bracket(g1, g1, zero_pt);
    SuperPoint minus = heap.ternary.bracket(g1, g1, zero_pt);
    std::cout << "signs +++ : [e1, e1, 0] = " << format_point(plus)
              << "   (idempotence fails: semiheap, not a heap)\n";
    std::cout << "signs +-+ : [e1, e1, 0] = " << format_point(minus) << "   (heap)\n";
    expect(plus == SuperPoint(SuperDomain{0, 1}, m, {},
                              {Rational(2) * GrassmannElement::generator(m, 1)}),
           "+++ bracket value");
    expect(minus == zero_pt, "+-+ bracket value");
    std::vector<LawReport> odd_reports =
        run_suite({"para-assoc:r01-semiheap", "para-assoc:r01-heap", "heap-axioms:r01-heap"}, cfg);
    std::cout << render_text(odd_reports);
    auto semi_fail = check_heap_axioms(semi, cfg);
    std::cout << render_text({semi_fail});
    expect(!semi_fail.passed, "r01-semiheap must fail the heap axioms");

    std::cout << "\n== Translation structure on (1|1) ==\n";
    SuperPoint a = parse_point("(1; e1)", SuperDomain{1, 1}, m);
    SuperPoint b = parse_point("(2; e2)", SuperDomain{1, 1}, m);
    SuperPoint e0 = SuperPoint::constant(SuperDomain{1, 1}, m, {Rational(0)});
    std::cout << "(1; e1) * (2; e2) = " << format_point(trans_mul(a, b)) << "\n";
    std::cout << "inverse of (3; e1) = "
              << format_point(trans_inv(parse_point("(3; e1)", SuperDomain{1, 1}, m))) << "\n";
    std::cout << "[(1; e1), (0; 0), (2; e2)] = "
              << format_point(trans_heap_closed_form(a, e0, b)) << "\n";
    expect(trans_heap_closed_form(a, e0, b) == trans_mul(a, b),
           "bracket at the basepoint recovers the product");
    std::cout << render_text(run_suite({"closed-form:trans-heap", "roundtrip:trans-group"}, cfg));

    std::cout << "\n== Multiplicative structure on (1|1), unit bodies ==\n";
    SuperPoint u = parse_point("(2; e1)", SuperDomain{1, 1}, m);
    SuperPoint v = parse_point("(1; e2)", SuperDomain{1, 1}, m);
    SuperPoint e1pt = SuperPoint::constant(SuperDomain{1, 1}, m, {Rational(1)});
    std::cout << "inverse of (2; e1) = " << format_point(mult_inv(u)) << "\n";
    std::cout << "(2; e1) * (1; e2) = " << format_point(mult_mul(u, v)) << "\n";
    std::cout << "[(2; e1), (1; 0), (1; e2)] = "
              << format_point(mult_heap_closed_form(u, e1pt, v)) << "\n";
    expect(mult_heap_closed_form(u, e1pt, v) == mult_mul(u, v),
           "bracket at the basepoint recovers the product");
    expect(mult_mul(u, mult_inv(u)) == e1pt, "inverse law");
    std::cout << render_text(run_suite({"closed-form:mult-heap", "roundtrip:mult-group"}, cfg));

    std::cout << "\n== Pointed vs unpointed morphisms ==\n";
    auto shift_ok = check_ternary_hom(trans_heap().ternary, trans_heap().ternary,
                                      translation_shift_map(Rational(5)), cfg);
    auto shift_bad =
        check_group_hom(trans_group(), trans_group(), translation_shift_map(Rational(5)), cfg);
    std::cout << render_text({shift_ok, shift_bad});
    expect(shift_ok.passed, "shift(5) is a bracket endomorphism");
    expect(!shift_bad.passed, "shift(5) moves the identity, not a group endomorphism");

    std::cout << "\n== Deliberately broken bracket ==\n";
    auto broken = check_para_associativity(broken_bracket(), cfg);
    std::cout << render_text({broken});
    expect(!broken.passed, "x*(y*z) is not para-associative");

    std::cout << "\nall demo expectations hold\n";
    return 0;
}

int run_list() {
    std::cout << "structures:\n";
    for (const auto& name : builtin_structure_names()) {
        StructureRef ref = resolve_structure(name);
        std::string kind;
        if (ref.is_group())
            kind = "group";
        else if (ref.is_pointed())
            kind = ref.ternary->claims_heap ? "pointed heap" : "pointed ternary";
        else
            kind = ref.ternary->claims_heap ? "heap" : "ternary";
        std::cout << "  " << name << "  [" << kind << " on " << ref.domain().to_string()
                  << (ref.requires_units() ? ", unit bodies" : "") << "]\n";
    }
    std::cout << "derived names: heapify:<group>, groupify:<pointed-heap>\n";
    std::cout << "laws:";
    for (const auto& law : law_names()) std::cout << " " << law;
    std::cout << "\n";
    std::cout << "hom fixtures (append /<fixture> to the structure):\n";
    std::cout << "  translation family:    id, scale(b), shift(c), sq\n";
    std::cout << "  multiplicative family: id, flip, uscale(c)\n";
    std::cout << "  odd line:              id, oscale(b)\n";
    std::cout << "naturality homs: incl, twist, composite\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of group, heap and semiheap laws on probe-valued points"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string suite = "all";
    std::string structure;
    std::string op;
    std::vector<std::string> points;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--generators", common.generators, "probe generator count m")
            ->check(CLI::Range(0, 32));
        cmd->add_option("--trials", common.trials, "trials per law")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", common.seed, "sampling seed");
        if (with_format)
            cmd->add_option("--format", common.format, "output format")
                ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* verify = app.add_subcommand("verify", "run law suites and report PASS/FAIL");
    verify->add_option("--suite", suite, "comma-separated <law>:<structure> selectors, or 'all'");
    add_common(verify, true);

    CLI::App* eval = app.add_subcommand("eval", "apply a structure operation to explicit points");
    eval->add_option("--structure", structure, "registry name")->required();
    eval->add_option("--point", points, "point in \"(comp; comp)\" form (repeatable)");
    eval->add_option("--op", op, "mul, inv or bracket")
        ->check(CLI::IsMember({"mul", "inv", "bracket"}));
    add_common(eval, false);

    CLI::App* demo = app.add_subcommand("demo", "replay the worked examples");
    add_common(demo, false);

    app.add_subcommand("list", "list structures, laws and fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("verify")) return run_verify(common, suite);
        if (app.got_subcommand("eval")) return run_eval(common, structure, points, op);
        if (app.got_subcommand("demo")) return run_demo(common);
        return run_list();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
