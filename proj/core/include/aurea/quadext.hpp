#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "aurea/rational.hpp"

namespace aurea {

// Element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)), with
// rational a, b and squarefree integer d >= 2.
//
// Stored forms are canonical: square factors of d fold into b on
// construction, and pure rationals are stored with b = 0 and the sentinel
// d = 2. Structural equality therefore coincides with value equality.
//
// Arithmetic is exact. Combining elements of distinct irrational fields
// (say sqrt(5) with sqrt(3)) raises Errc::mixed_fields; the library works
// in one quadratic extension at a time, never in towers.
//
// Values are immutable after construction and every operation is a pure
// function, so instances may be shared freely across threads.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(kSentinel) {}
  QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(kSentinel) {}  // NOLINT
  QuadExt(long a) : a_(a), b_(0), d_(kSentinel) {}                 // NOLINT
  QuadExt(Rational a, Rational b, Int d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  const Int& radicand() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  const Rational& as_rational() const;

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }

  QuadExt conjugate() const;

  // a^2 - b^2 d. Multiplicative, and zero only for the zero element.
  Rational norm() const;

  QuadExt inverse() const;

  // Exact sign via rational comparisons only: when a and b agree in sign
  // the answer is immediate; otherwise a^2 against b^2 d decides which
  // part dominates (they can never tie, since d is not a square).
  int sign() const;

  QuadExt abs() const { return sign() < 0 ? -*this : *this; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x);

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

  // Renders over a common denominator, e.g. "(1 + sqrt(5))/2", "2*sqrt(5)",
  // "-3/2". The output is accepted back by the CLI expression parser.
  std::string str() const;

  static Int sentinel_radicand() { return Int(kSentinel); }

 private:
  static constexpr long kSentinel = 2;
  struct Unchecked {};
  QuadExt(Rational a, Rational b, Int d, Unchecked);

  // The common field of two operands; throws Errc::mixed_fields.
  static const Int& merge_fields(const QuadExt& x, const QuadExt& y);

  Rational a_;
  Rational b_;
  Int d_;
};

// Numeric order within a common field; throws Errc::mixed_fields otherwise.
std::strong_ordering compare(const QuadExt& x, const QuadExt& y);

QuadExt pow(const QuadExt& base, unsigned exp);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace aurea
