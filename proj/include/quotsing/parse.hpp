#pragma once

#include <string>
#include <string_view>

#include "quotsing/group.hpp"

namespace quotsing {

// "1/r(a1,...,an)", several generators joined by '+'.
DiagonalAction parse_shorthand(std::string_view text);

// YAML or JSON document:
//   n: 3
//   generators:
//     - {order: 2, exponents: [1, 1, 1]}
// Compact flow style ({n:3, ...}) is accepted as well.
DiagonalAction parse_document(std::string_view text);

// Shorthand when the text starts with "1/", otherwise a document.
DiagonalAction parse_action(std::string_view text);

// Command-line argument: an existing file is read as a document, anything
// else is parsed as text.
DiagonalAction load_action(const std::string& arg);

// "det" for the determinant character, or a tuple "r1,...,rt" (parentheses
// optional) of values on the generators.
Character parse_character(std::string_view text, const DiagonalAction& action);

}  // namespace quotsing
