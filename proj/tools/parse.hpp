#pragma once

#include <string_view>

#include <aurea/matrix.hpp>
#include <aurea/polynomial.hpp>
#include <aurea/radical.hpp>

namespace aurea::cli {

struct ParsedEquation {
  Polynomial polynomial;
  char variable = 'x';
};

// Recursive-descent parser for "x^4 - 3x^2 + 1 = 0" style input: signed
// terms [coef][var[^exp]] with integer or slash-fraction coefficients,
// '*' optional, whitespace insignificant, one optional trailing "= 0".
// A single variable letter must be used consistently; exponents are capped
// at 16. Syntax errors carry the byte offset of the offending character.
ParsedEquation parse_polynomial(std::string_view text);

// Rows separated by ';', entries by ',' or whitespace; entries are
// integers or slash-fractions. The matrix must be rectangular
// (Errc::ragged_rows) and square (Errc::non_square).
Matrix parse_matrix(std::string_view text);

// Arithmetic over exact radicals: integers, + - * / ^, parentheses and
// sqrt(...). The expression is evaluated during parsing and must stay
// within radicals of nesting depth two: sqrt of an already-nested value
// raises Errc::nesting_too_deep, and sums that cannot be folded into a
// single radical raise Errc::not_representable.
Radical parse_radical(std::string_view text);

}  // namespace aurea::cli
