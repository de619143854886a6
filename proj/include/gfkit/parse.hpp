#pragma once

#include "gfkit/mpoly.hpp"

#include <string>

namespace gfkit {

// Parses an arithmetic expression into a polynomial. Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' ['-'] integer)*
//   atom   := integer | name | name '(' name ')' | '(' expr ')'
// '/' only divides by a nonzero constant. A parenthesized argument after a
// name forms a compound atom like "G(u)" used by the catalytic file format.
// Errors carry 1-based line:column positions.
MPoly parse_poly(const std::string& text);

} // namespace gfkit
