#pragma once

#include "aurea/polynomial.hpp"
#include "aurea/radical.hpp"

namespace aurea {

enum class DenestStatus { denested, irreducible };

// Outcome of trying to rewrite sqrt(a + b*sqrt(d)) as an element of
// Q(sqrt(d)). On success `value` is the nonnegative square root and
// value^2 equals the input exactly. The witness fields record the audit
// trail: s = sqrt(a^2 - b^2 d) and which of (a +/- s)/2 was the rational
// square (branch +1 or -1; 0 when the input was purely rational and the
// work was delegated to sqrt_rational).
struct DenestResult {
  DenestStatus status = DenestStatus::irreducible;
  QuadExt value;
  Rational witness_s;
  int branch = 0;
};

// Classical one-level denesting. sqrt(a + b*sqrt(d)) lies in Q(sqrt(d))
// exactly when s = sqrt(a^2 - b^2 d) is rational AND one of (a +/- s)/2 is
// the square of a rational x; then sqrt(a + b*sqrt(d)) = x + (b/2x)sqrt(d).
// At most one branch can be the rational square (their product is b^2 d / 4,
// never a square for squarefree d >= 2), so the witness is unambiguous.
//
// The criterion is complete for quadratic fields: every element of
// Q(sqrt(d)) whose square is e passes it. Consequently an `irreducible`
// verdict proves that sqrt(e) lies outside EVERY real quadratic field --
// if sqrt(a + b*sqrt(d)) = u + v*sqrt(d') with b != 0, squaring forces
// d' = d and then (u, v) solves exactly the equations tested here. That
// degree argument is what lets equal() below declare a residual tier-2
// value distinct from every tier-1 value.
//
// Requires e >= 0; negative input raises Errc::negative_radicand.
DenestResult denest_sqrt(const QuadExt& e);

// Stored-form canonicalization: a nested radical whose radicand denests is
// replaced by its signed tier-1 form; everything else passes through.
Radical canonicalize(const Radical& x);

// sign * sqrt(e), fully canonicalized on construction.
Radical canonical_sqrt(const QuadExt& e, int sign = +1);

// Exact value equality across representation tiers: canonicalize both
// sides, then compare stored forms. Sound and complete on this
// representation (see denest_sqrt notes on residual tier-2 values).
bool equal(const Radical& x, const Radical& y);

// The monic minimal polynomial over Q; degree 1, 2, or 4. Inputs are
// canonicalized first, so e.g. sqrt((3 + sqrt(5))/2) reports the degree-2
// polynomial of its denested form.
Polynomial minimal_polynomial(const Radical& x);

}  // namespace aurea
