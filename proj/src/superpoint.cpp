#include "superheap/superpoint.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "superheap/element_io.hpp"

namespace superheap {

namespace {

void check_slot(const GrassmannElement& component, int num_generators, Parity wanted,
                const char* kind, int index) {
    if (component.generators() != num_generators)
        throw std::invalid_argument(std::string(kind) + " component " + std::to_string(index) +
                                    " lives over " + std::to_string(component.generators()) +
                                    " generators, point uses " + std::to_string(num_generators));
    if (component.is_zero()) return;
    Parity actual = component.parity();
    if (actual != wanted)
        throw std::invalid_argument(std::string(kind) + " component " + std::to_string(index) +
                                    " has parity " + to_string(actual) + ", expected " +
                                    to_string(wanted));
}

}  // namespace

SuperPoint::SuperPoint(SuperDomain domain, int num_generators,
                       std::vector<GrassmannElement> evens, std::vector<GrassmannElement> odds)
    : domain_(domain),
      num_generators_(num_generators),
      evens_(std::move(evens)),
      odds_(std::move(odds)) {
    if (domain_.even_dim < 0 || domain_.odd_dim < 0)
        throw std::invalid_argument("SuperPoint: negative domain dimension");
    if (static_cast<int>(evens_.size()) != domain_.even_dim)
        throw std::invalid_argument("SuperPoint: expected " + std::to_string(domain_.even_dim) +
                                    " even components, got " + std::to_string(evens_.size()));
    if (static_cast<int>(odds_.size()) != domain_.odd_dim)
        throw std::invalid_argument("SuperPoint: expected " + std::to_string(domain_.odd_dim) +
                                    " odd components, got " + std::to_string(odds_.size()));
    for (std::size_t i = 0; i < evens_.size(); ++i)
        check_slot(evens_[i], num_generators_, Parity::Even, "even", static_cast<int>(i));
    for (std::size_t i = 0; i < odds_.size(); ++i)
        check_slot(odds_[i], num_generators_, Parity::Odd, "odd", static_cast<int>(i));
}

SuperPoint SuperPoint::constant(SuperDomain domain, int num_generators,
                                const std::vector<Rational>& values) {
    if (static_cast<int>(values.size()) != domain.even_dim)
        throw std::invalid_argument("constant point: expected " + std::to_string(domain.even_dim) +
                                    " even values, got " + std::to_string(values.size()));
    std::vector<GrassmannElement> evens;
    evens.reserve(values.size());
    for (const auto& v : values) evens.push_back(GrassmannElement::constant(num_generators, v));
    std::vector<GrassmannElement> odds(static_cast<std::size_t>(domain.odd_dim),
                                       GrassmannElement::zero(num_generators));
    return SuperPoint(domain, num_generators, std::move(evens), std::move(odds));
}

SuperPoint map_point(const AlgebraHom& h, const SuperPoint& p) {
    std::vector<GrassmannElement> evens, odds;
    evens.reserve(p.evens().size());
    odds.reserve(p.odds().size());
    for (const auto& c : p.evens()) evens.push_back(h(c));
    for (const auto& c : p.odds()) odds.push_back(h(c));
    return SuperPoint(p.domain(), h.target_generators(), std::move(evens), std::move(odds));
}

SuperPoint parse_point(std::string_view text, SuperDomain domain, int num_generators) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::size_t close = text.rfind(')');
    if (close == std::string_view::npos || close < pos) throw ParseError("expected ')'", text.size());
    std::size_t tail = close + 1;
    while (tail < text.size()) {
        if (!std::isspace(static_cast<unsigned char>(text[tail])))
            throw ParseError("unexpected text after ')'", tail);
        ++tail;
    }

    std::vector<GrassmannElement> components;
    std::size_t start = pos;
    const int arity = domain.even_dim + domain.odd_dim;
    if (arity > 0) {
        while (start <= close) {
            std::size_t sep = text.find(';', start);
            if (sep == std::string_view::npos || sep > close) sep = close;
            std::string_view piece = text.substr(start, sep - start);
            try {
                components.push_back(parse_element(piece, num_generators));
            } catch (const ParseError& e) {
                throw ParseError(e.message() + " (in component " +
                                     std::to_string(components.size()) + ")",
                                 start + e.position());
            }
            start = sep + 1;
            if (sep == close) break;
        }
    }
    if (static_cast<int>(components.size()) != arity)
        throw ParseError("point has " + std::to_string(components.size()) + " components, domain " +
                             domain.to_string() + " needs " + std::to_string(arity),
                         0);
    std::vector<GrassmannElement> evens(components.begin(), components.begin() + domain.even_dim);
    std::vector<GrassmannElement> odds(components.begin() + domain.even_dim, components.end());
    return SuperPoint(domain, num_generators, std::move(evens), std::move(odds));
}

std::string format_point(const SuperPoint& p) {
    std::string out = "(";
    bool first = true;
    for (const auto& c : p.evens()) {
        if (!first) out += "; ";
        out += format_element(c);
        first = false;
    }
    for (const auto& c : p.odds()) {
        if (!first) out += "; ";
        out += format_element(c);
        first = false;
    }
    return out + ")";
}

}  // namespace superheap
