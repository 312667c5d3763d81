#include "superheap/harness.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "superheap/element_io.hpp"

namespace superheap {

namespace {

Counterexample make_cx(const std::vector<SuperPoint>& inputs, const SuperPoint& lhs,
                       const SuperPoint& rhs) {
    Counterexample cx;
    cx.inputs.reserve(inputs.size());
    for (const auto& p : inputs) cx.inputs.push_back(format_point(p));
    cx.lhs = format_point(lhs);
    cx.rhs = format_point(rhs);
    return cx;
}

// Runs cfg.trials independent trials; a domain_error from a partial
// operation counts as a skipped trial, the first counterexample stops
// the run.
LawReport run_trials(
    std::string law, std::string structure, const SampleConfig& cfg,
    const std::function<std::optional<Counterexample>(std::uint64_t)>& trial_body) {
    LawReport report;
    report.law = std::move(law);
    report.structure = std::move(structure);
    report.config = cfg;
    if (cfg.trials < 1) throw std::invalid_argument("SampleConfig: trials must be >= 1");
    for (int t = 0; t < cfg.trials; ++t) {
        std::optional<Counterexample> cx;
        try {
            cx = trial_body(static_cast<std::uint64_t>(t));
        } catch (const std::domain_error&) {
            ++report.skipped;
            continue;
        }
        ++report.trials_run;
        if (cx) {
            report.passed = false;
            report.counterexample = std::move(cx);
            break;
        }
    }
    return report;
}

std::vector<SuperPoint> edge_tuple(SuperDomain domain, bool units, int arity, int m) {
    std::vector<SuperPoint> out;
    out.reserve(static_cast<std::size_t>(arity));
    for (int j = 0; j < arity; ++j) {
        const bool neutral = arity > 1 && j == arity - 1;
        std::vector<GrassmannElement> evens(
            static_cast<std::size_t>(domain.even_dim),
            GrassmannElement::constant(m, units ? Rational(1) : Rational(0)));
        std::vector<GrassmannElement> odds;
        odds.reserve(static_cast<std::size_t>(domain.odd_dim));
        for (int s = 0; s < domain.odd_dim; ++s) {
            if (!neutral && m >= 1)
                odds.push_back(GrassmannElement::generator(m, ((j + s) % m) + 1));
            else
                odds.push_back(GrassmannElement::zero(m));
        }
        out.emplace_back(domain, m, std::move(evens), std::move(odds));
    }
    return out;
}

void require_endo_domains(const PointMap& f, SuperDomain source, SuperDomain target,
                          const char* law) {
    if (f.source != source || f.target != target)
        throw std::invalid_argument(std::string(law) + ": fixture '" + f.name +
                                    "' maps " + f.source.to_string() + " -> " +
                                    f.target.to_string() + ", structures need " +
                                    source.to_string() + " -> " + target.to_string());
}

}  // namespace

SuperPoint sample_point(SuperDomain domain, bool units, int num_generators,
                        const SampleConfig& cfg, Rng& rng) {
    std::vector<GrassmannElement> evens, odds;
    evens.reserve(static_cast<std::size_t>(domain.even_dim));
    odds.reserve(static_cast<std::size_t>(domain.odd_dim));
    for (int i = 0; i < domain.even_dim; ++i) {
        if (units) {
            if (cfg.unit_body_pool.empty())
                throw std::invalid_argument(
                    "SampleConfig: unit_body_pool must be nonempty for unit-valued structures");
            // nonzero body plus a random even soul keeps the slot invertible
            GrassmannElement soul =
                random_element(num_generators, Parity::Even, cfg.max_terms, cfg.coeff_pool, rng)
                    .soul();
            const Rational& body = cfg.unit_body_pool[rng.below(cfg.unit_body_pool.size())];
            evens.push_back(GrassmannElement::constant(num_generators, body) + soul);
        } else {
            evens.push_back(
                random_element(num_generators, Parity::Even, cfg.max_terms, cfg.coeff_pool, rng));
        }
    }
    for (int i = 0; i < domain.odd_dim; ++i)
        odds.push_back(
            random_element(num_generators, Parity::Odd, cfg.max_terms, cfg.coeff_pool, rng));
    return SuperPoint(domain, num_generators, std::move(evens), std::move(odds));
}

std::vector<SuperPoint> sample_tuple(SuperDomain domain, bool units, int arity,
                                     const SampleConfig& cfg, std::uint64_t trial) {
    if (trial == 0) return edge_tuple(domain, units, arity, cfg.generators);
    Rng rng(derive_seed(cfg.rng_seed, trial));
    std::vector<SuperPoint> out;
    out.reserve(static_cast<std::size_t>(arity));
    for (int j = 0; j < arity; ++j)
        out.push_back(sample_point(domain, units, cfg.generators, cfg, rng));
    return out;
}

LawReport check_para_associativity(const TernaryStructure& h, const SampleConfig& cfg) {
    return run_trials("para-assoc", h.name, cfg,
                      [&](std::uint64_t t) -> std::optional<Counterexample> {
                          auto p = sample_tuple(h.domain, h.requires_units, 5, cfg, t);
                          SuperPoint left = h.bracket(h.bracket(p[0], p[1], p[2]), p[3], p[4]);
                          SuperPoint middle = h.bracket(p[0], h.bracket(p[3], p[2], p[1]), p[4]);
                          SuperPoint right = h.bracket(p[0], p[1], h.bracket(p[2], p[3], p[4]));
                          if (left != middle) return make_cx(p, left, middle);
                          if (left != right) return make_cx(p, left, right);
                          return std::nullopt;
                      });
}

LawReport check_heap_axioms(const TernaryStructure& h, const SampleConfig& cfg) {
    return run_trials("heap-axioms", h.name, cfg,
                      [&](std::uint64_t t) -> std::optional<Counterexample> {
                          auto p = sample_tuple(h.domain, h.requires_units, 2, cfg, t);
                          const SuperPoint &x = p[0], &y = p[1];
                          SuperPoint xxy = h.bracket(x, x, y);
                          if (xxy != y) return make_cx(p, xxy, y);
                          SuperPoint yxx = h.bracket(y, x, x);
                          if (yxx != y) return make_cx(p, yxx, y);
                          return std::nullopt;
                      });
}

LawReport check_group_axioms(const GroupStructure& g, const SampleConfig& cfg) {
    return run_trials(
        "group-axioms", g.name, cfg, [&](std::uint64_t t) -> std::optional<Counterexample> {
            auto p = sample_tuple(g.domain, g.requires_units, 3, cfg, t);
            const SuperPoint &a = p[0], &b = p[1], &c = p[2];
            SuperPoint e = g.identity(cfg.generators);
            SuperPoint left = g.mul(g.mul(a, b), c);
            SuperPoint right = g.mul(a, g.mul(b, c));
            if (left != right) return make_cx(p, left, right);
            SuperPoint ea = g.mul(e, a);
            if (ea != a) return make_cx({a}, ea, a);
            SuperPoint ae = g.mul(a, e);
            if (ae != a) return make_cx({a}, ae, a);
            SuperPoint ainv = g.inv(a);
            SuperPoint prod = g.mul(a, ainv);
            if (prod != e) return make_cx({a}, prod, e);
            SuperPoint prod2 = g.mul(ainv, a);
            if (prod2 != e) return make_cx({a}, prod2, e);
            return std::nullopt;
        });
}

LawReport check_ternary_hom(const TernaryStructure& source, const TernaryStructure& target,
                            const PointMap& f, const SampleConfig& cfg) {
    require_endo_domains(f, source.domain, target.domain, "ternary-hom");
    return run_trials("ternary-hom", source.name + "/" + f.name, cfg,
                      [&](std::uint64_t t) -> std::optional<Counterexample> {
                          auto p = sample_tuple(source.domain, source.requires_units, 3, cfg, t);
                          SuperPoint lhs = f.action(source.bracket(p[0], p[1], p[2]));
                          SuperPoint rhs =
                              target.bracket(f.action(p[0]), f.action(p[1]), f.action(p[2]));
                          if (lhs != rhs) return make_cx(p, lhs, rhs);
                          return std::nullopt;
                      });
}

LawReport check_group_hom(const GroupStructure& source, const GroupStructure& target,
                          const PointMap& f, const SampleConfig& cfg) {
    require_endo_domains(f, source.domain, target.domain, "group-hom");
    return run_trials(
        "group-hom", source.name + "/" + f.name, cfg,
        [&](std::uint64_t t) -> std::optional<Counterexample> {
            auto p = sample_tuple(source.domain, source.requires_units, 2, cfg, t);
            const SuperPoint &x = p[0], &y = p[1];
            SuperPoint e = source.identity(cfg.generators);
            SuperPoint e_target = target.identity(cfg.generators);
            SuperPoint fe = f.action(e);
            if (fe != e_target) return make_cx({e}, fe, e_target);
            SuperPoint fmul = f.action(source.mul(x, y));
            SuperPoint mulf = target.mul(f.action(x), f.action(y));
            if (fmul != mulf) return make_cx(p, fmul, mulf);
            SuperPoint finv = f.action(source.inv(x));
            SuperPoint invf = target.inv(f.action(x));
            if (finv != invf) return make_cx({x}, finv, invf);
            return std::nullopt;
        });
}

LawReport check_naturality(std::string_view structure_name, std::string_view hom_label,
                           const AlgebraHom& h, const SampleConfig& cfg) {
    if (h.source_generators() != cfg.generators)
        throw std::invalid_argument(
            "naturality: hom source has " + std::to_string(h.source_generators()) +
            " generators but cfg.generators is " + std::to_string(cfg.generators));
    StructureRef ref = resolve_structure(structure_name);
    const int m_src = cfg.generators;
    const int m_tgt = h.target_generators();
    std::string label = std::string(structure_name) + "/" + std::string(hom_label);

    if (ref.is_group()) {
        const GroupStructure& g = *ref.group;
        return run_trials(
            "naturality", label, cfg, [&, g](std::uint64_t t) -> std::optional<Counterexample> {
                auto p = sample_tuple(g.domain, g.requires_units, 2, cfg, t);
                const SuperPoint &a = p[0], &b = p[1];
                SuperPoint lhs = map_point(h, g.mul(a, b));
                SuperPoint rhs = g.mul(map_point(h, a), map_point(h, b));
                if (lhs != rhs) return make_cx(p, lhs, rhs);
                SuperPoint li = map_point(h, g.inv(a));
                SuperPoint ri = g.inv(map_point(h, a));
                if (li != ri) return make_cx({a}, li, ri);
                SuperPoint le = map_point(h, g.identity(m_src));
                SuperPoint re = g.identity(m_tgt);
                if (le != re) return make_cx({g.identity(m_src)}, le, re);
                return std::nullopt;
            });
    }
    const TernaryStructure tern = *ref.ternary;
    std::optional<PointFactory> base = ref.basepoint;
    return run_trials(
        "naturality", label, cfg, [&, tern, base](std::uint64_t t) -> std::optional<Counterexample> {
            auto p = sample_tuple(tern.domain, tern.requires_units, 3, cfg, t);
            SuperPoint lhs = map_point(h, tern.bracket(p[0], p[1], p[2]));
            SuperPoint rhs =
                tern.bracket(map_point(h, p[0]), map_point(h, p[1]), map_point(h, p[2]));
            if (lhs != rhs) return make_cx(p, lhs, rhs);
            if (base) {
                SuperPoint lb = map_point(h, (*base)(m_src));
                SuperPoint rb = (*base)(m_tgt);
                if (lb != rb) return make_cx({(*base)(m_src)}, lb, rb);
            }
            return std::nullopt;
        });
}

LawReport check_roundtrip(std::string_view structure_name, const SampleConfig& cfg) {
    StructureRef ref = resolve_structure(structure_name);
    if (ref.is_group()) {
        const GroupStructure g = *ref.group;
        const GroupStructure derived = groupify(heapify(g));
        return run_trials(
            "roundtrip", g.name, cfg, [&, g, derived](std::uint64_t t) -> std::optional<Counterexample> {
                auto p = sample_tuple(g.domain, g.requires_units, 2, cfg, t);
                const SuperPoint &a = p[0], &b = p[1];
                SuperPoint lhs = derived.mul(a, b);
                SuperPoint rhs = g.mul(a, b);
                if (lhs != rhs) return make_cx(p, lhs, rhs);
                SuperPoint li = derived.inv(a);
                SuperPoint ri = g.inv(a);
                if (li != ri) return make_cx({a}, li, ri);
                SuperPoint le = derived.identity(cfg.generators);
                SuperPoint re = g.identity(cfg.generators);
                if (le != re) return make_cx({}, le, re);
                return std::nullopt;
            });
    }
    if (!ref.is_pointed())
        throw std::invalid_argument("roundtrip: '" + std::string(structure_name) +
                                    "' is neither a group nor a pointed heap");
    const PointedTernaryStructure heap = ref.pointed();
    const PointedTernaryStructure derived = heapify(groupify(heap));
    return run_trials(
        "roundtrip", heap.ternary.name, cfg,
        [&, heap, derived](std::uint64_t t) -> std::optional<Counterexample> {
            auto p = sample_tuple(heap.ternary.domain, heap.ternary.requires_units, 3, cfg, t);
            SuperPoint lhs = derived.ternary.bracket(p[0], p[1], p[2]);
            SuperPoint rhs = heap.ternary.bracket(p[0], p[1], p[2]);
            if (lhs != rhs) return make_cx(p, lhs, rhs);
            SuperPoint lb = derived.basepoint(cfg.generators);
            SuperPoint rb = heap.basepoint(cfg.generators);
            if (lb != rb) return make_cx({}, lb, rb);
            return std::nullopt;
        });
}

LawReport check_closed_form(std::string_view structure_name, const SampleConfig& cfg) {
    PointedTernaryStructure closed;
    GroupStructure base;
    if (structure_name == "trans-heap") {
        closed = trans_heap();
        base = trans_group();
    } else if (structure_name == "mult-heap") {
        closed = mult_heap();
        base = mult_group();
    } else {
        throw std::invalid_argument("closed-form: no closed-form bracket registered for '" +
                                    std::string(structure_name) + "'");
    }
    const PointedTernaryStructure generic = heapify(base);
    return run_trials(
        "closed-form", closed.ternary.name, cfg,
        [&, closed, generic](std::uint64_t t) -> std::optional<Counterexample> {
            auto p = sample_tuple(closed.ternary.domain, closed.ternary.requires_units, 3, cfg, t);
            SuperPoint lhs = closed.ternary.bracket(p[0], p[1], p[2]);
            SuperPoint rhs = generic.ternary.bracket(p[0], p[1], p[2]);
            if (lhs != rhs) return make_cx(p, lhs, rhs);
            return std::nullopt;
        });
}

namespace {

struct Selector {
    std::string law;
    std::string structure;
    std::string fixture;  // optional "/fixture" suffix
};

Selector parse_selector(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        throw std::invalid_argument("malformed selector '" + text +
                                    "', expected <law>:<structure>[/<fixture>]");
    Selector sel;
    sel.law = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    auto slash = rest.find('/');
    if (slash == std::string::npos) {
        sel.structure = rest;
    } else {
        sel.structure = rest.substr(0, slash);
        sel.fixture = rest.substr(slash + 1);
        if (sel.fixture.empty())
            throw std::invalid_argument("malformed selector '" + text + "', empty fixture");
    }
    if (sel.structure.empty())
        throw std::invalid_argument("malformed selector '" + text + "', empty structure");
    return sel;
}

TernaryStructure require_ternary(const StructureRef& ref, const std::string& law) {
    if (!ref.is_ternary())
        throw std::invalid_argument(law + ": '" + ref.name() + "' is not a ternary structure");
    return *ref.ternary;
}

GroupStructure require_group(const StructureRef& ref, const std::string& law) {
    if (!ref.is_group())
        throw std::invalid_argument(law + ": '" + ref.name() + "' is not a group structure");
    return *ref.group;
}

void run_selector(const Selector& sel, const SampleConfig& cfg, std::vector<LawReport>& out) {
    if (sel.law == "para-assoc") {
        out.push_back(check_para_associativity(
            require_ternary(resolve_structure(sel.structure), sel.law), cfg));
    } else if (sel.law == "heap-axioms") {
        out.push_back(
            check_heap_axioms(require_ternary(resolve_structure(sel.structure), sel.law), cfg));
    } else if (sel.law == "group-axioms") {
        out.push_back(
            check_group_axioms(require_group(resolve_structure(sel.structure), sel.law), cfg));
    } else if (sel.law == "closed-form") {
        out.push_back(check_closed_form(sel.structure, cfg));
    } else if (sel.law == "roundtrip") {
        out.push_back(check_roundtrip(sel.structure, cfg));
    } else if (sel.law == "ternary-hom") {
        TernaryStructure tern = require_ternary(resolve_structure(sel.structure), sel.law);
        std::vector<PointMap> fixtures =
            sel.fixture.empty() ? default_ternary_hom_fixtures(sel.structure)
                                : std::vector<PointMap>{resolve_point_map(sel.structure,
                                                                          sel.fixture)};
        for (const auto& f : fixtures) out.push_back(check_ternary_hom(tern, tern, f, cfg));
    } else if (sel.law == "group-hom") {
        GroupStructure grp = require_group(resolve_structure(sel.structure), sel.law);
        std::vector<PointMap> fixtures =
            sel.fixture.empty() ? default_group_hom_fixtures(sel.structure)
                                : std::vector<PointMap>{resolve_point_map(sel.structure,
                                                                          sel.fixture)};
        for (const auto& f : fixtures) out.push_back(check_group_hom(grp, grp, f, cfg));
    } else if (sel.law == "naturality") {
        resolve_structure(sel.structure);  // validate the name before running
        if (sel.fixture.empty()) {
            for (const auto& [label, hom] : naturality_homs(cfg.generators))
                out.push_back(check_naturality(sel.structure, label, hom, cfg));
        } else {
            out.push_back(check_naturality(
                sel.structure, sel.fixture,
                resolve_naturality_hom(sel.fixture, cfg.generators), cfg));
        }
    } else {
        throw std::invalid_argument("unknown law '" + sel.law + "'");
    }
}

}  // namespace

std::vector<std::string> law_names() {
    return {"para-assoc", "heap-axioms", "group-axioms", "ternary-hom",
            "group-hom",  "naturality",  "roundtrip",    "closed-form"};
}

std::vector<std::string> all_suite_selectors() {
    return {
        "group-axioms:trans-group",
        "group-axioms:mult-group",
        "group-axioms:groupify:r01-heap",
        "group-axioms:groupify:trans-heap",
        "group-axioms:groupify:mult-heap",
        "heap-axioms:r01-heap",
        "heap-axioms:trans-heap",
        "heap-axioms:mult-heap",
        "heap-axioms:heapify:trans-group",
        "heap-axioms:heapify:mult-group",
        "para-assoc:r01-semiheap",
        "para-assoc:r01-heap",
        "para-assoc:trans-heap",
        "para-assoc:mult-heap",
        "para-assoc:heapify:trans-group",
        "para-assoc:heapify:mult-group",
        "closed-form:trans-heap",
        "closed-form:mult-heap",
        "roundtrip:trans-group",
        "roundtrip:mult-group",
        "roundtrip:r01-heap",
        "roundtrip:trans-heap",
        "roundtrip:mult-heap",
        "ternary-hom:trans-heap",
        "ternary-hom:mult-heap",
        "ternary-hom:r01-heap",
        "ternary-hom:r01-semiheap",
        "group-hom:trans-group",
        "group-hom:mult-group",
        "group-hom:groupify:r01-heap",
        "naturality:r01-semiheap",
        "naturality:r01-heap",
        "naturality:trans-group",
        "naturality:trans-heap",
        "naturality:mult-group",
        "naturality:mult-heap",
    };
}

std::vector<LawReport> run_suite(const std::vector<std::string>& selection,
                                 const SampleConfig& cfg) {
    if (selection.empty()) throw std::invalid_argument("empty suite selection");
    std::vector<std::string> expanded;
    for (const auto& entry : selection) {
        if (entry == "all") {
            auto all = all_suite_selectors();
            expanded.insert(expanded.end(), all.begin(), all.end());
        } else {
            expanded.push_back(entry);
        }
    }
    // every selector also runs on the degenerate probe m = 0, pinning the
    // body-level behavior of each law
    std::vector<SampleConfig> probes;
    if (cfg.generators != 0) {
        SampleConfig reduced = cfg;
        reduced.generators = 0;
        probes = {reduced, cfg};
    } else {
        probes = {cfg};
    }
    std::vector<LawReport> out;
    for (const auto& entry : expanded) {
        Selector sel = parse_selector(entry);
        for (const auto& probe : probes) run_selector(sel, probe, out);
    }
    return out;
}

bool all_passed(const std::vector<LawReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

std::string render_text(const std::vector<LawReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        out += r.passed ? "PASS " : "FAIL ";
        out += r.selector() + " m=" + std::to_string(r.config.generators) +
               " trials=" + std::to_string(r.trials_run) +
               " skipped=" + std::to_string(r.skipped) +
               " seed=" + std::to_string(r.config.rng_seed) + "\n";
    }
    for (const auto& r : reports) {
        if (r.passed || !r.counterexample) continue;
        out += "counterexample " + r.selector() + "\n";
        const auto& cx = *r.counterexample;
        for (std::size_t i = 0; i < cx.inputs.size(); ++i)
            out += "  input[" + std::to_string(i) + "]: " + cx.inputs[i] + "\n";
        out += "  lhs: " + cx.lhs + "\n";
        out += "  rhs: " + cx.rhs + "\n";
    }
    return out;
}

std::string render_json(const std::vector<LawReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json obj;
        obj["suite"] = r.selector();
        obj["structure"] = r.structure;
        obj["m"] = r.config.generators;
        obj["trials"] = r.trials_run;
        obj["skipped"] = r.skipped;
        obj["seed"] = r.config.rng_seed;
        obj["passed"] = r.passed;
        if (r.counterexample) {
            nlohmann::ordered_json cx;
            cx["inputs"] = r.counterexample->inputs;
            cx["lhs"] = r.counterexample->lhs;
            cx["rhs"] = r.counterexample->rhs;
            obj["counterexample"] = cx;
        } else {
            obj["counterexample"] = nullptr;
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

}  // namespace superheap
