#include "superheap/element_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace superheap {

namespace {

struct ElementParser {
    std::string_view text;
    int m;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() const { return pos >= text.size(); }

    bool eat(char c) {
        if (!at_end() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() const { return at_end() ? '\0' : text[pos]; }

    std::string digits() {
        std::size_t start = pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    }

    Rational coefficient() {
        std::string num = digits();
        skip_ws();
        if (eat('/')) {
            skip_ws();
            std::size_t den_pos = pos;
            std::string den = digits();
            if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
                pos = den_pos;
                fail("denominator must be positive");
            }
            return Rational::from_string(num + "/" + den);
        }
        return Rational::from_string(num);
    }

    int generator_index() {
        if (!eat('e')) fail("expected generator (e<k>)");
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected generator index after 'e'");
        std::size_t index_pos = pos;
        std::string ds = digits();
        if (ds.size() > 2) {
            pos = index_pos;
            fail("generator index out of range");
        }
        int k = std::stoi(ds);
        if (k < 1 || k > m) {
            pos = index_pos;
            fail("generator index e" + ds + " out of range for " + std::to_string(m) +
                 " generators");
        }
        return k;
    }

    // Signed monomial product; nullopt when a repeated generator makes
    // the term vanish.
    std::optional<std::pair<Monomial, int>> monomial() {
        std::vector<int> idx;
        idx.push_back(generator_index());
        skip_ws();
        while (eat('^')) {
            skip_ws();
            idx.push_back(generator_index());
            skip_ws();
        }
        int swaps = 0;
        for (std::size_t i = 1; i < idx.size(); ++i)
            for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
                std::swap(idx[j - 1], idx[j]);
                ++swaps;
            }
        std::uint32_t bits = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i > 0 && idx[i] == idx[i - 1]) return std::nullopt;
            bits |= std::uint32_t{1} << (idx[i] - 1);
        }
        return std::make_pair(Monomial{bits}, (swaps & 1) ? -1 : 1);
    }

    // term := [sign] (coeff ['*' mono] | mono). The optional sign keeps
    // the parser tolerant of signed coefficients after a binary operator.
    GrassmannElement term() {
        skip_ws();
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        skip_ws();
        if (at_end()) fail("expected term");
        GrassmannElement out(m);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational c = coefficient();
            if (sign < 0) c = -c;
            skip_ws();
            if (eat('*')) {
                skip_ws();
                auto mono = monomial();
                if (!mono) return out;  // repeated generator, term is zero
                auto [mask, s] = *mono;
                return (s < 0 ? -c : c) * GrassmannElement::basis(m, mask);
            }
            return GrassmannElement::constant(m, c);
        }
        if (peek() == 'e') {
            auto mono = monomial();
            if (!mono) return out;
            auto [mask, s] = *mono;
            return Rational(sign * s) * GrassmannElement::basis(m, mask);
        }
        fail("expected coefficient or monomial");
    }

    GrassmannElement run() {
        skip_ws();
        if (at_end()) fail("expected element");
        GrassmannElement out = term();
        skip_ws();
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos;
            out = op == '-' ? out - term() : out + term();
            skip_ws();
        }
        return out;
    }
};

std::string monomial_string(Monomial mono) {
    std::string out;
    for (int index : mono.indices()) {
        if (!out.empty()) out += "^";
        out += "e" + std::to_string(index);
    }
    return out;
}

}  // namespace

GrassmannElement parse_element(std::string_view text, int num_generators) {
    ElementParser p{text, num_generators};
    return p.run();
}

std::string format_element(const GrassmannElement& a) {
    if (a.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> terms(a.terms().begin(), a.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return degree_lex_less(x.first, y.first); });
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms) {
        bool negative = coeff.sign() < 0;
        Rational magnitude = negative ? -coeff : coeff;
        if (first) {
            first = false;
        } else {
            out += negative ? " - " : " + ";
            negative = false;
        }
        std::string mag = magnitude.to_string();
        if (mono.bits == 0) {
            out += negative ? "-" + mag : mag;
        } else if (magnitude == Rational(1)) {
            // leading negative keeps an explicit coefficient so the output
            // stays inside the published grammar
            out += negative ? "-1*" + monomial_string(mono) : monomial_string(mono);
        } else {
            out += (negative ? "-" + mag : mag) + "*" + monomial_string(mono);
        }
    }
    return out;
}

}  // namespace superheap
