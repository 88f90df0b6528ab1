#pragma once

#include "contactgeo/rational_function.hpp"

#include <string_view>

namespace contactgeo {

// Parses the expression grammar used by manifold documents:
//   integer and p/q rational literals, coordinate identifiers,
//   binary + - * /, ^ with a non-negative integer exponent, parentheses,
//   and unary minus. No function calls, no floating point.
// Throws ParseError (with position) or UnknownVariable.
RationalFunction parse_expression(std::string_view text, const VarsPtr& vars);

} // namespace contactgeo
