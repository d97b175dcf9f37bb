#pragma once

#include <string_view>

#include "ptl/curves.hpp"

namespace ptl::cli {

// Grammar:  spec := kind ';' field ';' body
//   kind  ::= "hyp" | "sup" | "add"
//   field ::= 'F' p ['^' k]
//   hyp body ::= "h=" poly
//   sup body ::= "m=" int ";a=" intlist ";b=" elemlist
//   add body ::= "A=" poly-in-y ";h=" poly
// Polynomials use '+', '-', '*', '^' with integer coefficients; the letter
// 't' denotes the extension-field generator.  Whitespace is insignificant.
// Failures throw Error(errc::parse) carrying the byte offset.
curves::CurveModel parse_curve_spec(std::string_view text);

}  // namespace ptl::cli
