#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superheap/registry.hpp"
#include "superheap/sampling.hpp"

namespace superheap {

/// Deterministic sampling plan for one law check. Identical configs give
/// byte-identical reports.
struct SampleConfig {
    int generators = 4;
    int trials = 200;
    std::uint64_t rng_seed = 42;
    std::vector<Rational> coeff_pool = {Rational(0),  Rational(1), Rational(-1),
                                        Rational(2), Rational(-2), Rational(1, 2)};
    int max_terms = 3;
    /// Bodies for even slots of unit-valued structures; must be nonzero.
    std::vector<Rational> unit_body_pool = {Rational(1), Rational(2), Rational(-1),
                                            Rational(1, 2)};
};

/// First failing sample of a law, kept as canonical point strings so it
/// can be re-parsed and re-evaluated standalone.
struct Counterexample {
    std::vector<std::string> inputs;
    std::string lhs;
    std::string rhs;
};

struct LawReport {
    std::string law;
    std::string structure;
    SampleConfig config;
    bool passed = true;
    int trials_run = 0;  // trials evaluated; trials_run + skipped == config.trials unless a failure stops the run
    int skipped = 0;     // trials whose evaluation hit a partial operation (e.g. non-unit)
    std::optional<Counterexample> counterexample;

    std::string selector() const { return law + ":" + structure; }
};

// Every check compares points by exact rational equality; there are no
// tolerances anywhere. Trial 0 probes a deterministic minimal tuple,
// later trials are seeded random samples.

/// [[x1,x2,x3],x4,x5] == [x1,[x4,x3,x2],x5] == [x1,x2,[x3,x4,x5]].
LawReport check_para_associativity(const TernaryStructure& h, const SampleConfig& cfg);

/// [x,x,y] == y and [y,x,x] == y.
LawReport check_heap_axioms(const TernaryStructure& h, const SampleConfig& cfg);

/// Associativity, two-sided identity, two-sided inverse.
LawReport check_group_axioms(const GroupStructure& g, const SampleConfig& cfg);

/// f([x,y,z]) == [f(x), f(y), f(z)].
LawReport check_ternary_hom(const TernaryStructure& source, const TernaryStructure& target,
                            const PointMap& f, const SampleConfig& cfg);

/// f(e) == e', f(xy) == f(x)f(y), f(x^-1) == f(x)^-1.
LawReport check_group_hom(const GroupStructure& source, const GroupStructure& target,
                          const PointMap& f, const SampleConfig& cfg);

/// Reparametrization commutes with every structure operation and fixes
/// the distinguished point. cfg.generators must equal h's source count.
LawReport check_naturality(std::string_view structure_name, std::string_view hom_label,
                           const AlgebraHom& h, const SampleConfig& cfg);

/// groupify(heapify(G)) == G for groups, heapify(groupify(H)) == H for
/// pointed heaps, on all samples.
LawReport check_roundtrip(std::string_view structure_name, const SampleConfig& cfg);

/// The closed-form bracket of trans-heap / mult-heap agrees with the
/// generic bracket of the heapified group.
LawReport check_closed_form(std::string_view structure_name, const SampleConfig& cfg);

/// Runs a list of `<law>:<structure>[/<fixture>]` selectors ("all" expands
/// to the canonical passing suite). Each selector runs on the degenerate
/// probe m = 0 and on cfg.generators. Unknown selectors throw; evaluation
/// is deterministic given (selection, cfg).
std::vector<LawReport> run_suite(const std::vector<std::string>& selection,
                                 const SampleConfig& cfg);

/// The canonical selector list behind "all".
std::vector<std::string> all_suite_selectors();

std::vector<std::string> law_names();

bool all_passed(const std::vector<LawReport>& reports);

/// One PASS/FAIL line per report, then counterexample blocks.
std::string render_text(const std::vector<LawReport>& reports);

/// Stable JSON: fixed key order, identical invocation gives identical
/// bytes.
std::string render_json(const std::vector<LawReport>& reports);

// Sampling helpers (shared with tests and the demo).
SuperPoint sample_point(SuperDomain domain, bool units, int num_generators,
                        const SampleConfig& cfg, Rng& rng);
std::vector<SuperPoint> sample_tuple(SuperDomain domain, bool units, int arity,
                                     const SampleConfig& cfg, std::uint64_t trial);

}  // namespace superheap
