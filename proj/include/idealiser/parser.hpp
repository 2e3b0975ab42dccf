#pragma once

#include <string_view>

#include "idealiser/poly.hpp"

namespace idealiser {

/// Parses a polynomial expression over `ring`.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' INTEGER)?
///   atom   := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
///
/// Whitespace is insignificant. Throws ParseError with the byte offset of the
/// failure for syntax errors, unknown variables and bad exponents.
Poly parse_poly(std::string_view text, const PolyRing& ring);

}  // namespace idealiser
