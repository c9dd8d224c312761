#pragma once

#include <gmpxx.h>

#include <optional>

namespace aurea {

// Arbitrary-precision integer. GMP supplies the arithmetic; the helpers
// below add the exact square/root primitives the rest of the library
// is built on.
using Int = mpz_class;

Int pow10(unsigned long k);

// floor(sqrt(n)); requires n >= 0.
Int isqrt(const Int& n);

// floor(n^(1/k)); requires n >= 0 and k >= 1.
Int iroot(const Int& n, unsigned long k);

bool is_perfect_square(const Int& n);
std::optional<Int> sqrt_if_square(const Int& n);

// n = square^2 * squarefree, with `squarefree` certified squarefree.
struct SquarefreeSplit {
  Int square;
  Int squarefree;
};

// Requires n > 0. Splits off the largest square divisor by trial division
// over primes up to 10^6 plus a perfect-square check on the cofactor.
// A cofactor above 10^18 that survives both steps cannot be certified
// squarefree without factoring; that raises Errc::squarefree_bound.
SquarefreeSplit squarefree_split(Int n);

}  // namespace aurea
