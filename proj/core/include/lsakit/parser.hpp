#pragma once

#include <span>
#include <string>
#include <string_view>

#include "lsakit/poly.hpp"

namespace lsakit {

/// Parses a polynomial expression over the given coordinates.
///
///   expr     := sign? term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' nonneg-int)?
///   base     := rational | ident | '(' expr ')'
///   rational := int ('/' posint)?
///   ident    := letter (letter | digit | '_')*
///
/// Whitespace is insignificant and implicit multiplication is rejected. The optional
/// leading sign lets printed polynomials with a negative leading coefficient parse back.
/// Throws SyntaxError (with a byte offset) or Error(UnknownVariable).
Poly parse_poly(std::string_view text, std::span<const std::string> coords);

}  // namespace lsakit
