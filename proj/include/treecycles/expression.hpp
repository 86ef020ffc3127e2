#pragma once

#include <string_view>

#include "treecycles/arnold.hpp"

namespace treecycles {

// Parses and normalizes a cohomology expression on `strands` strands:
//
//   EXPR   := ["+"|"-"] TERM (("+"|"-") TERM)*
//   TERM   := INT | [INT "*"] FACTOR ("*" FACTOR)*
//   FACTOR := "w(" INT "," INT ")"
//
// The Unicode minus sign U+2212 is accepted for "-"; whitespace is ignored.
CohomologyClass parse_expression(std::string_view text, int strands);

}  // namespace treecycles
