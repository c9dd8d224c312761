#include "aurea/decimal.hpp"

#include <stdexcept>

namespace aurea {

Int floor_scaled(const QuadExt& x, const Int& scale) {
  const Int qa = x.rational_part().denominator();
  const Int qb = x.radical_coefficient().denominator();
  Int q;
  mpz_lcm(q.get_mpz_t(), qa.get_mpz_t(), qb.get_mpz_t());
  Int a = x.rational_part().numerator() * (q / qa) * scale;
  const Int b = x.radical_coefficient().numerator() * (q / qb) * scale;

  // num = floor(a + b*sqrt(d)); the true value lies in [num, num + 1), an
  // interval containing no integer interior point, so floor(./q) of the
  // true value equals floor(num/q).
  Int num;
  if (b == 0) {
    num = a;
  } else {
    const Int m = b * b * x.radicand();
    const Int s = isqrt(m);
    if (sgn(b) > 0) {
      num = a + s;
    } else {
      num = a - s;
      if (s * s != m) num -= 1;
    }
  }
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
  return out;
}

namespace {

// t = floor(|x| * 10^digits) >= 0 rendered as a fixed-point decimal.
std::string format_fixed(const Int& t, unsigned digits, bool negative) {
  const Int scale = pow10(digits);
  const Int ip = t / scale;
  const Int fp = t % scale;
  std::string frac = fp.get_str();
  frac.insert(0, digits - frac.size(), '0');
  std::string out;
  if (negative && t != 0) out += '-';
  out += ip.get_str();
  out += '.';
  out += frac;
  return out;
}

}  // namespace

std::string to_decimal(const Radical& x, unsigned digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal requires digits >= 1");
  const int sign = x.sign_of();
  Int t;
  if (x.tier() == 1) {
    const QuadExt magnitude =
        sign < 0 ? -x.tier1_value() : x.tier1_value();
    t = floor_scaled(magnitude, pow10(digits));
  } else {
    t = isqrt(floor_scaled(x.radicand(), pow10(2UL * digits)));
  }
  return format_fixed(t, digits, sign < 0);
}

std::string to_decimal(const QuadExt& x, unsigned digits) {
  return to_decimal(Radical(x), digits);
}

std::string decimal_nth_root(const QuadExt& e, unsigned long n,
                             unsigned digits) {
  if (digits < 1)
    throw std::invalid_argument("decimal_nth_root requires digits >= 1");
  if (n < 1) throw std::invalid_argument("decimal_nth_root requires n >= 1");
  if (e.sign() < 0)
    throw Error(Errc::negative_radicand,
                "real n-th root of a negative value: " + e.str());
  const Int t = iroot(floor_scaled(e, pow10(n * digits)), n);
  return format_fixed(t, digits, false);
}

}  // namespace aurea
