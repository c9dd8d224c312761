#pragma once

#include <string>

#include "aurea/radical.hpp"

namespace aurea {

// floor(scale * x), computed exactly with integer arithmetic; scale > 0.
//
// Writing x = (A + B*sqrt(d))/Q over a common denominator, B*sqrt(d) is
// bracketed by an integer square root of B^2 d, and floor(./Q) is constant
// on the unit interval that brackets the numerator. No digit is ever the
// result of floating-point rounding.
Int floor_scaled(const QuadExt& x, const Int& scale);

// Decimal expansion of x truncated toward zero after `digits` fractional
// digits (digits >= 1). Truncation, not rounding: the reciprocal golden
// ratio prints as "0.6180339" at seven digits, never "0.6180340".
//
// Tier-2 values need no denesting: floor(10^k sqrt(e)) equals the integer
// square root of floor(10^2k e).
std::string to_decimal(const Radical& x, unsigned digits);
std::string to_decimal(const QuadExt& x, unsigned digits);

// Decimal expansion (same truncation) of the real n-th root of e >= 0,
// via floor(10^k e^(1/n)) = floor(floor(10^nk e)^(1/n)).
std::string decimal_nth_root(const QuadExt& e, unsigned long n,
                             unsigned digits);

}  // namespace aurea
