#include <doctest.h>

#include <vector>

#include <aurea/decimal.hpp>
#include <aurea/denest.hpp>

#include "test_support.hpp"

using namespace aurea;

namespace {
const QuadExt rho(Rational(1, 2), Rational(1, 2), Int(5));
const QuadExt rho_sq(Rational(3, 2), Rational(1, 2), Int(5));
}  // namespace

TEST_SUITE("denest") {

TEST_CASE("the nested golden-ratio square denests") {
  const DenestResult r = denest_sqrt(rho_sq);
  REQUIRE(r.status == DenestStatus::denested);
  CHECK(r.value == rho);
  CHECK(r.witness_s == Rational(1));
  CHECK(r.branch == -1);  // (a - s)/2 = 1/4 was the rational square
  CHECK(r.value * r.value == rho_sq);
}

TEST_CASE("rational radicands delegate to sqrt_rational") {
  const DenestResult r = denest_sqrt(QuadExt(Rational(9, 4)));
  REQUIRE(r.status == DenestStatus::denested);
  CHECK(r.value == QuadExt(Rational(3, 2)));
  const DenestResult irr = denest_sqrt(QuadExt(Rational(5)));
  REQUIRE(irr.status == DenestStatus::denested);
  CHECK(irr.value == QuadExt(Rational(0), Rational(1), Int(5)));
}

TEST_CASE("a deeper power denests one level") {
  // ((3 + sqrt(5))/2)^2 = (7 + 3*sqrt(5))/2
  const QuadExt rho4 = rho_sq * rho_sq;
  CHECK(rho4 == QuadExt(Rational(7, 2), Rational(3, 2), Int(5)));
  const DenestResult r = denest_sqrt(rho4);
  REQUIRE(r.status == DenestStatus::denested);
  CHECK(r.value == rho_sq);
}

TEST_CASE("irreducible radicand") {
  const QuadExt e(Rational(2), Rational(1), Int(5));  // 2 + sqrt(5)
  const DenestResult r = denest_sqrt(e);
  CHECK(r.status == DenestStatus::irreducible);
  // independent cross-checks: no small element of Q(sqrt(5)) squares to e,
  // and the decimal value matches the hand value 2.0581710...
  CHECK_FALSE(testing::sqrt_in_field_search(e, 6, 4).has_value());
  CHECK(to_decimal(Radical::sqrt_of(e), 7) == "2.0581710");
}

TEST_CASE("negative radicands are rejected") {
  CHECK_AUREA_ERROR(denest_sqrt(QuadExt(Rational(-1))),
                    Errc::negative_radicand);
  CHECK_AUREA_ERROR(denest_sqrt(QuadExt(Rational(1, 2), Rational(-1, 2),
                                        Int(5))),
                    Errc::negative_radicand);
}

TEST_CASE("completeness: squares from the field always denest") {
  testing::Rng rng(0x5EED000A);
  for (int i = 0; i < 500; ++i) {
    QuadExt w = testing::random_quadext5(rng, 10, 5);
    if (w.sign() < 0) w = -w;  // canonical nonnegative root
    const DenestResult r = denest_sqrt(w * w);
    REQUIRE(r.status == DenestStatus::denested);
    CHECK(r.value == w);
    CHECK(r.value.sign() >= 0);
  }
}

TEST_CASE("equality across representation tiers") {
  CHECK(equal(Radical::sqrt_of(rho_sq), Radical(rho)));
  // -sqrt((3 - sqrt(5))/2) = -(sqrt(5) - 1)/2
  const QuadExt conj_sq(Rational(3, 2), Rational(-1, 2), Int(5));
  CHECK(equal(Radical::sqrt_of(conj_sq, -1),
              Radical(QuadExt(Rational(1, 2), Rational(-1, 2), Int(5)))));
  CHECK_FALSE(equal(Radical(rho),
                    Radical(QuadExt(Rational(-1, 2), Rational(1, 2), Int(5)))));
  // an irreducible nested radical differs from every tier-1 value
  const Radical irr = Radical::sqrt_of(QuadExt(Rational(2), Rational(1), Int(5)));
  CHECK_FALSE(equal(irr, Radical(rho)));
  CHECK_FALSE(equal(irr, Radical(Rational(2))));
  CHECK(equal(irr, irr));
  CHECK_FALSE(equal(irr, irr.negated()));
  // different base fields
  CHECK_FALSE(equal(sqrt_rational(Rational(2)), sqrt_rational(Rational(3))));
  // nested forms with different radicands
  const Radical irr3 = Radical::sqrt_of(QuadExt(Rational(1), Rational(1), Int(3)));
  CHECK_FALSE(equal(irr, irr3));
}

TEST_CASE("equal is an equivalence relation on a closed sample") {
  testing::Rng rng(0x5EED000B);
  std::vector<Radical> sample;
  for (int i = 0; i < 8; ++i) {
    QuadExt w = testing::random_quadext5(rng, 6, 3);
    if (w.sign() < 0) w = -w;
    if (w.is_zero()) w = QuadExt(Rational(1));
    sample.push_back(Radical(w));
    sample.push_back(Radical::sqrt_of(w * w));        // denestable nest
    sample.push_back(Radical::sqrt_of(w + QuadExt(Rational(7))));
    sample.push_back(sample.back().negated());
  }
  const std::size_t n = sample.size();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(equal(sample[i], sample[i]));
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(equal(sample[i], sample[j]) == equal(sample[j], sample[i]));
      for (std::size_t k = 0; k < n; ++k)
        if (equal(sample[i], sample[j]) && equal(sample[j], sample[k]))
          CHECK(equal(sample[i], sample[k]));
    }
  }

  SUBCASE("equal values have identical decimals; distinct ones separate") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (equal(sample[i], sample[j]))
          CHECK(to_decimal(sample[i], 30) == to_decimal(sample[j], 30));
        else
          CHECK(to_decimal(sample[i], 60) != to_decimal(sample[j], 60));
      }
  }
}

TEST_CASE("minimal polynomials of the spec's corner cases") {
  CHECK(minimal_polynomial(Radical(rho)) == Polynomial({-1, -1, 1}));
  CHECK(minimal_polynomial(Radical::sqrt_of(rho_sq)) ==
        Polynomial({-1, -1, 1}));
  CHECK(minimal_polynomial(
            Radical::sqrt_of(QuadExt(Rational(2), Rational(1), Int(5)))) ==
        Polynomial({-1, 0, -4, 0, 1}));
  CHECK(minimal_polynomial(Radical(Rational(7))) == Polynomial({-7, 1}));
  // fourth root of two: sqrt(sqrt(2))
  const Radical fourth =
      Radical::sqrt_of(QuadExt(Rational(0), Rational(1), Int(2)));
  CHECK(minimal_polynomial(fourth) == Polynomial({-2, 0, 0, 0, 1}));
}

TEST_CASE("minimal polynomial properties on random values") {
  testing::Rng rng(0x5EED000C);
  for (int i = 0; i < 300; ++i) {
    const Radical x = testing::random_radical(rng);
    const Polynomial mp = minimal_polynomial(x);
    CHECK(is_root(mp, x));
    CHECK((mp.degree() == 1 || mp.degree() == 2 || mp.degree() == 4));
    CHECK(mp.leading() == Rational(1));
  }
}

TEST_CASE("the nested quartet ties back to the quartic") {
  const Polynomial quartic({1, 0, -3, 0, 1});
  const Polynomial minus({-1, -1, 1});  // x^2 - x - 1
  const Polynomial plus({-1, 1, 1});    // x^2 + x - 1
  const QuadExt conj_sq(Rational(3, 2), Rational(-1, 2), Int(5));
  const std::vector<Radical> quartet{
      Radical::sqrt_of(rho_sq), Radical::sqrt_of(rho_sq, -1),
      Radical::sqrt_of(conj_sq), Radical::sqrt_of(conj_sq, -1)};
  for (const Radical& root : quartet) {
    const Polynomial mp = minimal_polynomial(root);
    CHECK((mp == minus || mp == plus));
    CHECK(is_root(quartic, root));
  }
  CHECK(minus * plus == quartic);
}

}  // TEST_SUITE
