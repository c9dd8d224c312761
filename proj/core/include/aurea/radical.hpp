#pragma once

#include <iosfwd>
#include <string>

#include "aurea/quadext.hpp"

namespace aurea {

// A real radical value of nesting depth at most two:
//
//   tier 1:  an element of a quadratic field, a + b*sqrt(d)
//   tier 2:  sign * sqrt(e) for a positive QuadExt e with an irrational
//            part (b != 0)
//
// Construction keeps tier 2 minimal in one cheap way: the square root of a
// pure rational always collapses to tier 1 (sqrt(9/4) -> 3/2,
// sqrt(20) -> 2*sqrt(5)). It does NOT attempt to denest irrational
// radicands -- sqrt((3 + sqrt(5))/2) stays nested as written. Callers that
// want fully canonical values go through canonicalize()/canonical_sqrt()
// in denest.hpp, which rewrites a nested radical as a tier-1 element
// whenever one exists.
//
// operator== compares stored forms. Two radicals with equal values but
// different tiers compare unequal here; value equality across tiers is
// equal() in denest.hpp.
class Radical {
 public:
  Radical() : tier_(1), value_(0), sign_(0) {}
  Radical(QuadExt v) : tier_(1), value_(std::move(v)), sign_(0) {}  // NOLINT
  Radical(Rational r) : Radical(QuadExt(std::move(r))) {}           // NOLINT
  Radical(long r) : Radical(QuadExt(r)) {}                          // NOLINT

  // sign * sqrt(e); requires e >= 0. Rational e collapses to tier 1.
  static Radical sqrt_of(const QuadExt& e, int sign = +1);

  int tier() const { return tier_; }

  // Tier-1 accessors.
  const QuadExt& tier1_value() const;

  // Tier-2 accessors.
  int sign() const;
  const QuadExt& radicand() const;

  // Exact numeric sign of the value.
  int sign_of() const;
  bool is_zero() const { return tier_ == 1 && value_.is_zero(); }

  Radical negated() const;

  // Multiplication and division stay within the representation by folding
  // scalars into radicands: t * sqrt(e) = sign(t) * sqrt(t^2 e). Mixing
  // distinct quadratic fields raises Errc::mixed_fields.
  Radical times(const Radical& o) const;
  Radical divided_by(const Radical& o) const;
  Radical inverse() const;
  Radical pow(unsigned exp) const;

  // Addition is closed only for tier-1 operands; a sum involving a nested
  // radical and a nonzero second term raises Errc::not_representable.
  Radical plus(const Radical& o) const;
  Radical minus(const Radical& o) const;

  // The exact square as a field element (tier 1: v^2; tier 2: the radicand).
  QuadExt square() const;

  friend bool operator==(const Radical& x, const Radical& y) {
    return x.tier_ == y.tier_ && x.value_ == y.value_ && x.sign_ == y.sign_;
  }

  std::string str() const;

 private:
  Radical(int sign, QuadExt radicand);

  int tier_;
  QuadExt value_;  // tier-1 value, or tier-2 radicand
  int sign_;       // tier-2 only: +1 or -1 (0 for tier 1)
};

// Exact square root of a nonnegative rational, always tier 1: a plain
// rational when r is a rational square, (s/t)*sqrt(d) otherwise, with the
// largest square factor extracted. Negative input raises
// Errc::negative_radicand.
Radical sqrt_rational(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Radical& x);

}  // namespace aurea
