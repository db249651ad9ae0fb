#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kahler/polynomial.hpp"

namespace kahler {

/// Parses the polynomial input language:
///
///   expr    := ['-'] term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := base ('^' natural)?
///   base    := literal | variable | '(' expr ')'
///   literal := integer | integer '/' positive-integer
///
/// Whitespace is insignificant. Multiplication must be explicit.
/// Throws ParseError (SyntaxError, UnknownVariable, InvalidLiteral).
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Identifiers appearing in `text`, in order of first appearance.
std::vector<std::string> collect_identifiers(std::string_view text);

/// Variable names for a set of inputs when none are declared: x1..x<max>
/// when every identifier has the form x<digits>, sorted names otherwise.
std::vector<std::string> infer_variables(const std::vector<std::string>& texts);

}  // namespace kahler
