#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gravity/arnold.hpp"

namespace gravity {

// Parses the expression grammar shared with the CLI:
//   expr   := term (('+'|'-') term)*
//   term   := coeff? ('*'? factor)+  |  coeff
//   factor := 'w(' int ',' int ')'
//   coeff  := int | int '/' int
// Pure-coefficient terms cover degree-0 elements so printing round-trips.
// The ambient label count is the maximum label seen unless `ambient` is
// given; labels above a given ambient raise LabelOutOfRange. The result is
// straightened. Throws ParseError (with byte offset) on malformed input and
// InvalidGenerator on w(a,a).
ArnoldElement parse_expression(std::string_view text, std::optional<int> ambient = std::nullopt);

// Canonical text form: basis-ordered terms, " + " / " - " separators,
// coefficients as "p/q" with unit coefficients omitted. parse . print is
// the identity on elements.
std::string print_element(const ArnoldElement& x);

std::string print_tensor(const TensorElement& t);  // terms "(out) (x) (in)"

}  // namespace gravity
