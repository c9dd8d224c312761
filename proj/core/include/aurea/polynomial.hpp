#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aurea/radical.hpp"

namespace aurea {

// Result of evaluating a polynomial at a radical point.
//
// At a tier-1 point the value is a plain field element (u, with
// nested = false). At a tier-2 point sign*sqrt(e) the evaluation runs in
// the quotient ring Q(sqrt(d))[s]/(s^2 - e) and the result is u + v*s,
// with the point's sign already folded into v.
//
// is_zero() decides whether the VALUE is zero, not whether the pair is
// (0, 0): when e happens to be a square in its own field the ring has zero
// divisors, and u + v*sqrt(e) vanishes exactly when -u/v is the
// nonnegative square root of e. That check needs only field arithmetic,
// so root tests stay exact even on denestable radicands.
struct EvalValue {
  QuadExt u;
  QuadExt v;
  QuadExt radicand;
  bool nested = false;

  bool is_zero() const;

  friend bool operator==(const EvalValue&, const EvalValue&) = default;
};

// Ring operations for evaluations at the same point.
EvalValue operator+(const EvalValue& x, const EvalValue& y);
EvalValue operator*(const EvalValue& x, const EvalValue& y);

// Dense univariate polynomial over the rationals. Coefficient i multiplies
// x^i; trailing zeros are never stored and the empty vector is the zero
// polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial monomial(unsigned degree, Rational coefficient = 1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Zero beyond the stored degree.
  const Rational& coeff(unsigned i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Polynomial scaled(const Rational& k) const;

  Rational eval(const Rational& x) const;
  QuadExt eval(const QuadExt& x) const;
  EvalValue eval(const Radical& x) const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p);

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.c_ == q.c_;
  }

  // "x^4 - 3x^2 + 1" style rendering, highest degree first. Accepted back
  // verbatim by the CLI equation parser.
  std::string str(char variable = 'x') const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// True exactly when p(x) = 0, with no tolerance at any tier.
bool is_root(const Polynomial& p, const Radical& x);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace aurea
