#include "aurea/radical.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace aurea {

Radical::Radical(int sign, QuadExt radicand)
    : tier_(2), value_(std::move(radicand)), sign_(sign) {
  if (sign_ != 1 && sign_ != -1)
    throw std::logic_error("tier-2 sign must be +1 or -1");
}

Radical Radical::sqrt_of(const QuadExt& e, int sign) {
  if (e.sign() < 0)
    throw Error(Errc::negative_radicand,
                "square root of a negative value: " + e.str());
  if (e.is_rational()) {
    Radical r = sqrt_rational(e.as_rational());
    return sign < 0 ? r.negated() : r;
  }
  return Radical(sign < 0 ? -1 : +1, e);
}

const QuadExt& Radical::tier1_value() const {
  if (tier_ != 1) throw std::logic_error("tier1_value on a nested radical");
  return value_;
}

int Radical::sign() const {
  if (tier_ != 2) throw std::logic_error("sign on an unnested radical");
  return sign_;
}

const QuadExt& Radical::radicand() const {
  if (tier_ != 2) throw std::logic_error("radicand on an unnested radical");
  return value_;
}

int Radical::sign_of() const {
  // A tier-2 radicand is irrational, hence strictly positive.
  return tier_ == 1 ? value_.sign() : sign_;
}

Radical Radical::negated() const {
  if (tier_ == 1) return Radical(-value_);
  return Radical(-sign_, value_);
}

Radical Radical::times(const Radical& o) const {
  if (tier_ == 1 && o.tier_ == 1) {
    // Pure square roots multiply across fields: b1*sqrt(d1) * b2*sqrt(d2)
    // = b1*b2*sqrt(d1*d2). Anything with a rational part stays field-bound.
    if (!value_.is_rational() && !o.value_.is_rational() &&
        value_.radicand() != o.value_.radicand() &&
        value_.rational_part().is_zero() &&
        o.value_.rational_part().is_zero()) {
      const Radical root = sqrt_rational(
          Rational(Int(value_.radicand() * o.value_.radicand())));
      const QuadExt coeff(value_.radical_coefficient() *
                          o.value_.radical_coefficient());
      return Radical(coeff * root.tier1_value());
    }
    return Radical(value_ * o.value_);
  }
  if (tier_ == 2 && o.tier_ == 2)
    return sqrt_of(value_ * o.value_, sign_ * o.sign_);
  const Radical& nested = tier_ == 2 ? *this : o;
  const QuadExt& scalar = tier_ == 1 ? value_ : o.value_;
  if (scalar.is_zero()) return Radical(0);
  return sqrt_of(nested.value_ * scalar * scalar,
                 nested.sign_ * scalar.sign());
}

Radical Radical::inverse() const {
  if (tier_ == 1) return Radical(value_.inverse());
  return Radical(sign_, value_.inverse());
}

Radical Radical::divided_by(const Radical& o) const {
  if (o.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
  return times(o.inverse());
}

Radical Radical::pow(unsigned exp) const {
  Radical out(1);
  Radical b = *this;
  while (exp != 0) {
    if (exp & 1) out = out.times(b);
    exp >>= 1;
    if (exp != 0) b = b.times(b);
  }
  return out;
}

Radical Radical::plus(const Radical& o) const {
  if (tier_ == 1 && o.tier_ == 1) return Radical(value_ + o.value_);
  if (tier_ == 2 && o.is_zero()) return *this;
  if (o.tier_ == 2 && is_zero()) return o;
  throw Error(Errc::not_representable,
              "sum of a nested radical and a nonzero term is not a radical "
              "of depth <= 2");
}

Radical Radical::minus(const Radical& o) const { return plus(o.negated()); }

QuadExt Radical::square() const {
  return tier_ == 1 ? value_ * value_ : value_;
}

std::string Radical::str() const {
  if (tier_ == 1) return value_.str();
  return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + value_.str() + ")";
}

Radical sqrt_rational(const Rational& r) {
  if (r.sign() < 0)
    throw Error(Errc::negative_radicand,
                "square root of a negative rational: " + r.str());
  if (r.is_zero()) return Radical(0);
  // sqrt(p/q) = sqrt(p*q)/q; extract the square part of p*q.
  const Int pq = r.numerator() * r.denominator();
  SquarefreeSplit split = squarefree_split(pq);
  const Rational coeff(split.square, r.denominator());
  if (split.squarefree == 1) return Radical(QuadExt(coeff));
  return Radical(QuadExt(Rational(0), coeff, split.squarefree));
}

std::ostream& operator<<(std::ostream& os, const Radical& x) {
  return os << x.str();
}

}  // namespace aurea
