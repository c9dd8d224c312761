#include "aurea/integers.hpp"

#include <cstdint>
#include <vector>

#include "aurea/errors.hpp"

namespace aurea {

Int pow10(unsigned long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int iroot(const Int& n, unsigned long k) {
  Int r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

bool is_perfect_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Int> sqrt_if_square(const Int& n) {
  if (!is_perfect_square(n)) return std::nullopt;
  return isqrt(n);
}

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialBound; j += i)
        composite[static_cast<std::size_t>(j)] = true;
    }
    return ps;
  }();
  return primes;
}

}  // namespace

SquarefreeSplit squarefree_split(Int n) {
  if (sgn(n) <= 0)
    throw Error(Errc::negative_radicand, "squarefree_split requires n > 0");
  SquarefreeSplit out{1, 1};
  if (n == 1) return out;
  if (auto s = sqrt_if_square(n)) {
    out.square = *s;
    return out;
  }
  for (std::uint32_t p : small_primes()) {
    if (n == 1) break;
    // All factors below p are gone, so n < p^2 means n is prime.
    if (mpz_cmp_ui(n.get_mpz_t(),
                   static_cast<unsigned long>(p) * p) < 0) {
      out.squarefree *= n;
      n = 1;
      break;
    }
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e & 1) out.squarefree *= p;
    if (e >= 2) {
      Int pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, e / 2);
      out.square *= pk;
    }
  }
  if (n == 1) return out;
  if (auto s = sqrt_if_square(n)) {
    out.square *= *s;
    return out;
  }
  // The cofactor has no prime factor <= 10^6 and is not a perfect square.
  // Below 10^18 it has at most two prime factors and is squarefree.
  static const Int certify_bound = [] {
    Int b;
    mpz_ui_pow_ui(b.get_mpz_t(), 10, 18);
    return b;
  }();
  if (n > certify_bound)
    throw Error(Errc::squarefree_bound,
                "cannot certify the radicand squarefree: cofactor exceeds "
                "10^18 after trial division up to 10^6");
  out.squarefree *= n;
  return out;
}

}  // namespace aurea
