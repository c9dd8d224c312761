#include "aurea/rational.hpp"

#include <cctype>
#include <ostream>

namespace aurea {

Rational::Rational(const Int& num, const Int& den) : v_(0) {
  if (sgn(den) == 0)
    throw Error(Errc::division_by_zero, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  v_ = std::move(q);
}

Rational Rational::from_string(std::string_view text) {
  // Strict shape check first: mpz_set_str silently skips whitespace,
  // which is too lax for round-tripping machine output.
  const auto bad = [&](std::size_t at) -> Error {
    return Error(Errc::syntax_error,
                 "malformed rational '" + std::string(text) + "' at byte " +
                     std::to_string(at),
                 at);
  };
  std::size_t i = 0;
  const std::size_t n = text.size();
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  const std::size_t num_begin = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw bad(i);
  std::size_t den_begin = std::string_view::npos;
  if (i < n && text[i] == '/') {
    den_begin = ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) throw bad(i);
  }
  if (i != n) throw bad(i);
  std::string_view num_text =
      text.substr(0, den_begin == std::string_view::npos ? n : den_begin - 1);
  if (!num_text.empty() && num_text.front() == '+') num_text.remove_prefix(1);
  const Int num((std::string(num_text)));
  const Int den = den_begin == std::string_view::npos
                      ? Int(1)
                      : Int(std::string(text.substr(den_begin)));
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

bool Rational::is_square() const {
  return sign() >= 0 && is_perfect_square(numerator()) &&
         is_perfect_square(denominator());
}

std::optional<Rational> Rational::sqrt_if_square() const {
  if (!is_square()) return std::nullopt;
  return Rational(isqrt(numerator()), isqrt(denominator()));
}

std::string Rational::str() const {
  return is_integer() ? numerator().get_str()
                      : numerator().get_str() + "/" + denominator().get_str();
}

Rational pow(const Rational& base, unsigned exp) {
  Rational out(1);
  Rational b = base;
  while (exp != 0) {
    if (exp & 1) out *= b;
    exp >>= 1;
    if (exp != 0) b *= b;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace aurea
