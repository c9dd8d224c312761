#include "aurea/quadext.hpp"

#include <ostream>
#include <utility>

namespace aurea {

QuadExt::QuadExt(Rational a, Rational b, Int d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_.is_zero()) {
    d_ = kSentinel;
    return;
  }
  if (sgn(d_) < 0)
    throw Error(Errc::negative_radicand,
                "complex quadratic fields (d < 0) are out of scope");
  if (d_ == 0) {
    b_ = Rational(0);
    d_ = kSentinel;
    return;
  }
  // Fold square factors of d into b so the stored radicand is squarefree.
  SquarefreeSplit split = squarefree_split(d_);
  if (split.square != 1) b_ *= Rational(split.square);
  d_ = split.squarefree;
  if (d_ == 1) {
    a_ += b_;
    b_ = Rational(0);
    d_ = kSentinel;
  }
}

QuadExt::QuadExt(Rational a, Rational b, Int d, Unchecked)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_.is_zero()) d_ = kSentinel;
}

const Rational& QuadExt::as_rational() const {
  if (!is_rational())
    throw Error(Errc::not_representable,
                "value has an irrational part: " + str());
  return a_;
}

const Int& QuadExt::merge_fields(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational()) return y.d_;
  if (y.is_rational()) return x.d_;
  if (x.d_ != y.d_)
    throw Error(Errc::mixed_fields,
                "cannot combine sqrt(" + x.d_.get_str() + ") with sqrt(" +
                    y.d_.get_str() + ")");
  return x.d_;
}

QuadExt QuadExt::conjugate() const { return QuadExt(a_, -b_, d_, Unchecked{}); }

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  const Rational n = norm();
  return QuadExt(a_ / n, -b_ / n, d_, Unchecked{});
}

int QuadExt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare |a| with |b|*sqrt(d) by squaring. Equality is
  // impossible because d is squarefree and at least 2.
  return a_ * a_ > b_ * b_ * Rational(d_) ? sa : sb;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  const Int& d = QuadExt::merge_fields(x, y);
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d, QuadExt::Unchecked{});
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  const Int& d = QuadExt::merge_fields(x, y);
  return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d, QuadExt::Unchecked{});
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  const Int& d = QuadExt::merge_fields(x, y);
  return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d),
                 x.a_ * y.b_ + x.b_ * y.a_, d, QuadExt::Unchecked{});
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  if (y.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
  return x * y.inverse();
}

QuadExt operator-(const QuadExt& x) {
  return QuadExt(-x.a_, -x.b_, x.d_, QuadExt::Unchecked{});
}

std::string QuadExt::str() const {
  if (is_rational()) return a_.str();
  // Rewrite a + b*sqrt(d) as (A + B*sqrt(d))/Q over a common denominator.
  Int q;
  mpz_lcm(q.get_mpz_t(), a_.denominator().get_mpz_t(),
          b_.denominator().get_mpz_t());
  const Int cap_a = a_.numerator() * (q / a_.denominator());
  const Int cap_b = b_.numerator() * (q / b_.denominator());
  const Int abs_b = ::abs(cap_b);

  std::string radical;
  if (abs_b == 1)
    radical = "sqrt(" + d_.get_str() + ")";
  else
    radical = abs_b.get_str() + "*sqrt(" + d_.get_str() + ")";

  std::string core;
  if (cap_a == 0)
    core = (sgn(cap_b) < 0 ? "-" : "") + radical;
  else
    core = cap_a.get_str() + (sgn(cap_b) < 0 ? " - " : " + ") + radical;

  if (q == 1) return core;
  return "(" + core + ")/" + q.get_str();
}

std::strong_ordering compare(const QuadExt& x, const QuadExt& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QuadExt pow(const QuadExt& base, unsigned exp) {
  QuadExt out(1);
  QuadExt b = base;
  while (exp != 0) {
    if (exp & 1) out = out * b;
    exp >>= 1;
    if (exp != 0) b = b * b;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  return os << x.str();
}

}  // namespace aurea
