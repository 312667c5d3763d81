#include "superheap/registry.hpp"

#include <stdexcept>
#include <utility>

namespace superheap {

namespace {

StructureRef from_group(GroupStructure g) {
    StructureRef ref;
    ref.group = std::move(g);
    return ref;
}

StructureRef from_ternary(TernaryStructure t) {
    StructureRef ref;
    ref.ternary = std::move(t);
    return ref;
}

StructureRef from_pointed(PointedTernaryStructure p) {
    StructureRef ref;
    ref.ternary = std::move(p.ternary);
    ref.basepoint = std::move(p.basepoint);
    return ref;
}

enum class Family { Translation, Multiplicative, OddLine };

Family family_of(std::string_view name) {
    std::string_view rest = name;
    while (true) {
        if (rest.starts_with("heapify:")) {
            rest.remove_prefix(8);
        } else if (rest.starts_with("groupify:")) {
            rest.remove_prefix(9);
        } else {
            break;
        }
    }
    if (rest.starts_with("trans-") || rest == "broken-bracket") return Family::Translation;
    if (rest.starts_with("mult-")) return Family::Multiplicative;
    if (rest.starts_with("r01-")) return Family::OddLine;
    throw std::invalid_argument("unknown structure family for '" + std::string(name) + "'");
}

Rational parse_fixture_arg(std::string_view fixture, std::string_view prefix) {
    // "<prefix>(<rational>)"
    std::string_view inner = fixture.substr(prefix.size());
    if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
        throw std::invalid_argument("malformed fixture '" + std::string(fixture) + "'");
    return Rational::from_string(std::string(inner.substr(1, inner.size() - 2)));
}

}  // namespace

PointedTernaryStructure StructureRef::pointed() const {
    if (!is_pointed())
        throw std::invalid_argument("structure '" + name() + "' is not a pointed ternary structure");
    return PointedTernaryStructure{*ternary, *basepoint};
}

StructureRef resolve_structure(std::string_view name) {
    if (name.starts_with("heapify:")) {
        StructureRef inner = resolve_structure(name.substr(8));
        if (!inner.is_group())
            throw std::invalid_argument("heapify expects a group, '" +
                                        std::string(name.substr(8)) + "' is not one");
        return from_pointed(heapify(*inner.group));
    }
    if (name.starts_with("groupify:")) {
        StructureRef inner = resolve_structure(name.substr(9));
        if (!inner.is_pointed())
            throw std::invalid_argument("groupify expects a pointed heap, '" +
                                        std::string(name.substr(9)) + "' is not one");
        return from_group(groupify(inner.pointed()));
    }
    if (name == "trans-group") return from_group(trans_group());
    if (name == "mult-group") return from_group(mult_group());
    if (name == "r01-semiheap") return from_ternary(r01_semiheap());
    if (name == "r01-heap") return from_pointed(r01_heap());
    if (name == "trans-heap") return from_pointed(trans_heap());
    if (name == "mult-heap") return from_pointed(mult_heap());
    if (name == "broken-bracket") return from_ternary(broken_bracket());
    throw std::invalid_argument("unknown structure '" + std::string(name) + "'");
}

std::vector<std::string> builtin_structure_names() {
    return {"r01-semiheap", "r01-heap",  "trans-group",    "trans-heap",
            "mult-group",   "mult-heap", "broken-bracket"};
}

PointMap resolve_point_map(std::string_view structure_name, std::string_view fixture_name) {
    Family family = family_of(structure_name);
    SuperDomain domain = resolve_structure(structure_name).domain();
    if (fixture_name == "id") return identity_map(domain);
    switch (family) {
        case Family::Translation:
            if (fixture_name.starts_with("scale("))
                return translation_scaling_endo(parse_fixture_arg(fixture_name, "scale"));
            if (fixture_name.starts_with("shift("))
                return translation_shift_map(parse_fixture_arg(fixture_name, "shift"));
            if (fixture_name == "sq") return translation_square_map();
            break;
        case Family::Multiplicative:
            if (fixture_name == "flip") return mult_parity_flip();
            if (fixture_name.starts_with("uscale("))
                return mult_unit_scale(parse_fixture_arg(fixture_name, "uscale"));
            break;
        case Family::OddLine:
            if (fixture_name.starts_with("oscale("))
                return odd_scaling_map(parse_fixture_arg(fixture_name, "oscale"));
            break;
    }
    throw std::invalid_argument("unknown fixture '" + std::string(fixture_name) +
                                "' for structure '" + std::string(structure_name) + "'");
}

std::vector<PointMap> default_ternary_hom_fixtures(std::string_view structure_name) {
    switch (family_of(structure_name)) {
        case Family::Translation:
            return {translation_scaling_endo(Rational(2)),
                    translation_scaling_endo(Rational(-1)),
                    translation_scaling_endo(Rational(1, 2)),
                    translation_shift_map(Rational(5))};
        case Family::Multiplicative:
            return {identity_map(SuperDomain{1, 1}), mult_parity_flip(),
                    mult_unit_scale(Rational(2))};
        case Family::OddLine:
            return {odd_scaling_map(Rational(2)), odd_scaling_map(Rational(-1))};
    }
    return {};
}

std::vector<PointMap> default_group_hom_fixtures(std::string_view structure_name) {
    switch (family_of(structure_name)) {
        case Family::Translation:
            return {identity_map(SuperDomain{1, 1}), translation_scaling_endo(Rational(2)),
                    translation_scaling_endo(Rational(-1)), translation_scaling_endo(Rational(0))};
        case Family::Multiplicative:
            return {identity_map(SuperDomain{1, 1}), mult_parity_flip()};
        case Family::OddLine:
            return {odd_scaling_map(Rational(2)), odd_scaling_map(Rational(-1))};
    }
    return {};
}

std::vector<std::pair<std::string, AlgebraHom>> naturality_homs(int source_generators) {
    std::vector<std::pair<std::string, AlgebraHom>> out;
    out.emplace_back("incl", resolve_naturality_hom("incl", source_generators));
    out.emplace_back("twist", resolve_naturality_hom("twist", source_generators));
    out.emplace_back("composite", resolve_naturality_hom("composite", source_generators));
    return out;
}

AlgebraHom resolve_naturality_hom(std::string_view hom_name, int source_generators) {
    const int m = source_generators;
    if (hom_name == "incl") {
        // inclusion into one extra generator (identity at the cap)
        const int target = m < kMaxGenerators ? m + 1 : m;
        std::vector<GrassmannElement> images;
        images.reserve(m);
        for (int i = 1; i <= m; ++i) images.push_back(GrassmannElement::generator(target, i));
        return AlgebraHom(m, target, std::move(images));
    }
    if (hom_name == "twist") {
        // signed cyclic permutation of the generators
        std::vector<GrassmannElement> images;
        images.reserve(m);
        for (int i = 1; i <= m; ++i)
            images.push_back(Rational(-1) * GrassmannElement::generator(m, (i % m) + 1));
        return AlgebraHom(m, m, std::move(images));
    }
    if (hom_name == "composite") {
        // first images pick up degree-3 corrections; the last image is a
        // pure composite when room allows
        std::vector<GrassmannElement> images;
        images.reserve(m);
        for (int i = 1; i <= m; ++i) images.push_back(GrassmannElement::generator(m, i));
        if (m >= 3) {
            GrassmannElement cubic = GrassmannElement::generator(m, m - 2) *
                                     GrassmannElement::generator(m, m - 1) *
                                     GrassmannElement::generator(m, m);
            images[0] = images[0] + Rational(2) * cubic;
            images[1] = images[1] - GrassmannElement::generator(m, m);
            if (m >= 4) images[m - 1] = cubic;
        }
        return AlgebraHom(m, m, std::move(images));
    }
    throw std::invalid_argument("unknown naturality hom '" + std::string(hom_name) + "'");
}

}  // namespace superheap
