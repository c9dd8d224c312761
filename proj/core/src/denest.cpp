#include "aurea/denest.hpp"

namespace aurea {

DenestResult denest_sqrt(const QuadExt& e) {
  if (e.sign() < 0)
    throw Error(Errc::negative_radicand,
                "cannot denest the square root of a negative value: " +
                    e.str());
  if (e.is_rational()) {
    Radical r = sqrt_rational(e.as_rational());
    return {DenestStatus::denested, r.tier1_value(),
            e.as_rational().abs(), 0};
  }
  const Rational& a = e.rational_part();
  const Rational& b = e.radical_coefficient();
  const Rational n = e.norm();
  if (n.sign() < 0) return {};
  const auto s = n.sqrt_if_square();
  if (!s) return {};
  for (int branch : {+1, -1}) {
    const Rational half =
        (branch > 0 ? a + *s : a - *s) / Rational(2);
    const auto x = half.sqrt_if_square();
    if (!x || x->is_zero()) continue;
    const Rational y = b / (Rational(2) * *x);
    QuadExt value(*x, y, e.radicand());
    if (value.sign() < 0) value = -value;
    return {DenestStatus::denested, value, *s, branch};
  }
  return {};
}

Radical canonicalize(const Radical& x) {
  if (x.tier() == 1) return x;
  const DenestResult r = denest_sqrt(x.radicand());
  if (r.status != DenestStatus::denested) return x;
  return Radical(x.sign() < 0 ? -r.value : r.value);
}

Radical canonical_sqrt(const QuadExt& e, int sign) {
  return canonicalize(Radical::sqrt_of(e, sign));
}

bool equal(const Radical& x, const Radical& y) {
  const Radical cx = canonicalize(x);
  const Radical cy = canonicalize(y);
  if (cx.tier() != cy.tier()) return false;
  if (cx.tier() == 1) return cx.tier1_value() == cy.tier1_value();
  return cx.sign() == cy.sign() && cx.radicand() == cy.radicand();
}

Polynomial minimal_polynomial(const Radical& x) {
  const Radical c = canonicalize(x);
  if (c.tier() == 1) {
    const QuadExt& v = c.tier1_value();
    if (v.is_rational()) return Polynomial({-v.as_rational(), Rational(1)});
    return Polynomial(
        {v.norm(), Rational(-2) * v.rational_part(), Rational(1)});
  }
  const QuadExt& e = c.radicand();
  if (e.is_rational())  // rational radicands collapse at construction;
                        // kept for completeness of the case analysis
    return Polynomial({-e.as_rational(), Rational(0), Rational(1)});
  return Polynomial({e.norm(), Rational(0), Rational(-2) * e.rational_part(),
                     Rational(0), Rational(1)});
}

}  // namespace aurea
