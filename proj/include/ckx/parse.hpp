#pragma once

#include "ckx/axial.hpp"

#include <string>

namespace ckx {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Polynomial mini-language:
///   poly   := ['-'] term (('+'|'-') term)*
///   term   := [rational] factor*
///   factor := var ['^' uint] | blade
///   var    := 'x' uint            (index 0..m)
///   blade  := 'e' digit+          (indices increasing, each 1..m)
/// Whitespace-insensitive; "5" is the scalar term; the unicode minus is
/// accepted as '-'. Round-trips with print_polynomial.
CliffordPolynomial parse_polynomial(const std::string& text, unsigned m);

/// Canonical text form: blade-level terms ordered by graded-lex monomial
/// then (grade, mask); inverse of parse_polynomial.
std::string print_polynomial(const CliffordPolynomial& p);

}  // namespace ckx
