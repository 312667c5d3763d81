#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "superheap/grassmann.hpp"

namespace superheap {

/// Syntax error in element or point text, with the byte offset it was
/// detected at.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                             message),
          message_(message),
          position_(position) {}

    const std::string& message() const { return message_; }
    std::size_t position() const { return position_; }

private:
    std::string message_;
    std::size_t position_;
};

/// Element grammar:
///   element := term (('+'|'-') term)*
///   term    := coeff | coeff '*' mono | mono
///   coeff   := integer | integer '/' positive-integer
///   mono    := 'e'k ('^' 'e'k)*
/// Whitespace is insignificant between tokens. Monomials are
/// sign-normalized, so "e2^e1" parses to minus e1^e2.
GrassmannElement parse_element(std::string_view text, int num_generators);

/// Canonical form: terms in ascending degree then lexicographic index
/// order, integer or p/q coefficients, a single space around binary +/-,
/// "0" for the zero element. parse_element(format_element(a), m) == a.
std::string format_element(const GrassmannElement& a);

}  // namespace superheap
