#include <doctest.h>

#include <aurea/matrix.hpp>

#include "test_support.hpp"

using namespace aurea;

TEST_SUITE("matrix") {

TEST_CASE("path-graph adjacency") {
  const Matrix a = Matrix::path_adjacency(4);
  const int expected[4][4] = {
      {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(a.at(i, j) == Rational(expected[i][j]));

  CHECK(Matrix::path_adjacency(1).at(0, 0) == Rational(0));
  const Matrix p2 = Matrix::path_adjacency(2);
  CHECK(p2.at(0, 1) == Rational(1));
  CHECK(p2.at(1, 0) == Rational(1));
  CHECK(p2.at(0, 0) == Rational(0));

  CHECK_AUREA_ERROR(Matrix::path_adjacency(0), Errc::dimension_out_of_range);
  CHECK_AUREA_ERROR(Matrix::path_adjacency(13), Errc::dimension_out_of_range);
}

TEST_CASE("characteristic polynomials of small paths") {
  CHECK(Matrix::path_adjacency(1).charpoly() == Polynomial({0, 1}));
  CHECK(Matrix::path_adjacency(2).charpoly() == Polynomial({-1, 0, 1}));
  CHECK(Matrix::path_adjacency(3).charpoly() == Polynomial({0, -2, 0, 1}));
  CHECK(Matrix::path_adjacency(4).charpoly() ==
        Polynomial({1, 0, -3, 0, 1}));
  CHECK(Matrix::identity(2).charpoly() == Polynomial({1, -2, 1}));
}

TEST_CASE("determinants") {
  CHECK(Matrix::path_adjacency(4).det() == Rational(1));
  CHECK(Matrix::identity(3).det() == Rational(1));
  Matrix diag(2);
  diag.set(0, 0, Rational(2));
  diag.set(1, 1, Rational(3));
  CHECK(diag.det() == Rational(6));

  Matrix singular(2);
  singular.set(0, 0, Rational(1));
  singular.set(0, 1, Rational(2));
  singular.set(1, 0, Rational(2));
  singular.set(1, 1, Rational(4));
  CHECK(singular.det() == Rational(0));

  Matrix fractions(2);
  fractions.set(0, 0, Rational(1, 2));
  fractions.set(0, 1, Rational(1, 3));
  fractions.set(1, 0, Rational(1, 4));
  fractions.set(1, 1, Rational(1, 5));
  CHECK(fractions.det() == Rational(1, 60));

  // zero pivot forces a row swap
  Matrix swap(3);
  swap.set(0, 1, Rational(1));
  swap.set(1, 0, Rational(1));
  swap.set(2, 2, Rational(1));
  CHECK(swap.det() == Rational(-1));
}

TEST_CASE("charpoly agrees with the cofactor oracle") {
  testing::Rng rng(0x5EED0008);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
    const Matrix m = testing::random_matrix(rng, n);
    CHECK(m.charpoly() == testing::charpoly_cofactor(m));
  }
}

TEST_CASE("charpoly coefficient identities") {
  testing::Rng rng(0x5EED0009);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
    const Matrix m = testing::random_matrix(rng, n);
    const Polynomial cp = m.charpoly();
    // constant term and subleading coefficient
    const Rational sign(n % 2 == 0 ? 1 : -1);
    CHECK(cp.eval(Rational(0)) == sign * m.det());
    CHECK(cp.coeff(static_cast<unsigned>(n) - 1) == -m.trace());
    CHECK(cp.leading() == Rational(1));
    CHECK(cp.degree() == static_cast<int>(n));
  }
}

}  // TEST_SUITE
