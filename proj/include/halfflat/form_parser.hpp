#pragma once

#include <string_view>
#include <vector>

#include "halfflat/kform.hpp"
#include "halfflat/scalar.hpp"

namespace halfflat {

// Form expressions over generators e1..e9:
//
//   expr    := ["+"|"-"] product (("+"|"-") product)*
//   product := factor ("*" factor)*          (scalar product or wedge)
//   factor  := scalar | generator | "(" expr ")"
//   generator := "e" ["^"] (digits | "{" digits "}")   e23 = e^2 wedge e^3
//   scalar  := rational ["r2"] | "r2"         r2 = sqrt(2)
//   rational := int ["/" int]
//
// Whitespace is ignored. Examples: "e1-e2", "r2*(e3-e5)", "1/2*r2*e6",
// "-e^{14}+e^{23}". Errors throw ParseError.

/// Parses one homogeneous form on n generators.
KForm parse_form(std::string_view text, int n);
/// Parses a comma-separated list of forms (commas inside parentheses do not split).
std::vector<KForm> parse_form_list(std::string_view text, int n);
/// Parses a scalar literal: "3", "-1/2", "r2", "1/2r2".
Scalar parse_scalar(std::string_view text);

}  // namespace halfflat
