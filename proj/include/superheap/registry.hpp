#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superheap/functors.hpp"

namespace superheap {

/// A named structure resolved from the registry: always carries either a
/// group or a ternary bundle, plus a basepoint when the structure is
/// pointed.
struct StructureRef {
    std::optional<GroupStructure> group;
    std::optional<TernaryStructure> ternary;
    std::optional<PointFactory> basepoint;

    bool is_group() const { return group.has_value(); }
    bool is_ternary() const { return ternary.has_value(); }
    bool is_pointed() const { return is_ternary() && basepoint.has_value(); }

    const std::string& name() const { return is_group() ? group->name : ternary->name; }
    SuperDomain domain() const { return is_group() ? group->domain : ternary->domain; }
    bool requires_units() const {
        return is_group() ? group->requires_units : ternary->requires_units;
    }

    /// The pointed bundle; throws when the structure is not a pointed
    /// ternary one.
    PointedTernaryStructure pointed() const;
};

/// Resolves a registry name. Built-ins: r01-semiheap, r01-heap,
/// trans-group, trans-heap, mult-group, mult-heap, broken-bracket.
/// Derived names heapify:<group> and groupify:<pointed-heap> are accepted
/// recursively wherever a structure name is accepted.
StructureRef resolve_structure(std::string_view name);

std::vector<std::string> builtin_structure_names();

/// Resolves an endomorphism fixture for the family a structure belongs
/// to: id everywhere; scale(b), shift(c), sq on translation structures;
/// flip, uscale(c) on multiplicative ones; oscale(b) on the odd line.
PointMap resolve_point_map(std::string_view structure_name, std::string_view fixture_name);

/// Default morphism fixtures for the hom laws; all are positive
/// witnesses (the bare selector must pass).
std::vector<PointMap> default_ternary_hom_fixtures(std::string_view structure_name);
std::vector<PointMap> default_group_hom_fixtures(std::string_view structure_name);

/// Reparametrization fixtures for naturality checks at a given source
/// generator count: an inclusion into one more generator, a signed
/// generator permutation, and a hom with composite odd images.
std::vector<std::pair<std::string, AlgebraHom>> naturality_homs(int source_generators);
AlgebraHom resolve_naturality_hom(std::string_view hom_name, int source_generators);

}  // namespace superheap
