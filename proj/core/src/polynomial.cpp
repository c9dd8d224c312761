#include "aurea/polynomial.hpp"

#include <ostream>
#include <stdexcept>

namespace aurea {

bool EvalValue::is_zero() const {
  if (!nested || v.is_zero()) return u.is_zero() && v.is_zero();
  // u + v*sqrt(e) = 0 iff -u/v is the nonnegative square root of e.
  const QuadExt w = -(u / v);
  return w.sign() >= 0 && w * w == radicand;
}

namespace {

void check_same_point(const EvalValue& x, const EvalValue& y) {
  if (x.nested != y.nested || (x.nested && x.radicand != y.radicand))
    throw std::logic_error("EvalValue arithmetic across different points");
}

}  // namespace

EvalValue operator+(const EvalValue& x, const EvalValue& y) {
  check_same_point(x, y);
  return {x.u + y.u, x.v + y.v, x.radicand, x.nested};
}

EvalValue operator*(const EvalValue& x, const EvalValue& y) {
  check_same_point(x, y);
  if (!x.nested) return {x.u * y.u, QuadExt(0), x.radicand, false};
  return {x.u * y.u + x.v * y.v * x.radicand, x.u * y.v + x.v * y.u,
          x.radicand, true};
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : c_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : c_(coefficients) {
  normalize();
}

Polynomial Polynomial::monomial(unsigned degree, Rational coefficient) {
  std::vector<Rational> c(degree + 1);
  c[degree] = std::move(coefficient);
  return Polynomial(std::move(c));
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::coeff(unsigned i) const {
  static const Rational zero(0);
  return i < c_.size() ? c_[i] : zero;
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero");
  return c_.back();
}

Polynomial Polynomial::scaled(const Rational& k) const {
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * k;
  return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QuadExt Polynomial::eval(const QuadExt& x) const {
  QuadExt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + QuadExt(*it);
  return acc;
}

EvalValue Polynomial::eval(const Radical& x) const {
  if (x.tier() == 1)
    return {eval(x.tier1_value()), QuadExt(0), QuadExt(0), false};
  // Horner in Q(sqrt(d))[s]/(s^2 - e) with the point sign*s:
  // (u + v s) * (sign*s) = sign*v*e + sign*u*s.
  const QuadExt& e = x.radicand();
  const QuadExt sign(Rational(x.sign()));
  QuadExt u(0), v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const QuadExt nu = sign * v * e + QuadExt(*it);
    v = sign * u;
    u = nu;
  }
  return {u, v, e, true};
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> out(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = p.coeff(static_cast<unsigned>(i)) +
             q.coeff(static_cast<unsigned>(i));
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  return p + (-q);
}

Polynomial operator-(const Polynomial& p) { return p.scaled(Rational(-1)); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<Rational> out(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j)
      out[i + j] += p.c_[i] * q.c_[j];
  return Polynomial(std::move(out));
}

std::string Polynomial::str(char variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    const Rational a = c.abs();
    if (i == 0) {
      out += a.str();
    } else {
      if (!a.is_one()) out += a.str();
      out += variable;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

bool is_root(const Polynomial& p, const Radical& x) {
  return p.eval(x).is_zero();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.str();
}

}  // namespace aurea
