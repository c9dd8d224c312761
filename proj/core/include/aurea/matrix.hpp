#pragma once

#include <cstddef>
#include <vector>

#include "aurea/polynomial.hpp"
#include "aurea/rational.hpp"

namespace aurea {

// Small square matrix of exact rationals. Dimensions are capped at 12:
// the Faddeev-LeVerrier recursion over big rationals stays sub-second at
// desk scale and nothing here needs sparse machinery.
class Matrix {
 public:
  explicit Matrix(std::size_t n);
  static Matrix identity(std::size_t n);

  // Adjacency matrix of the path graph on n vertices: ones on the super-
  // and sub-diagonal, zeros elsewhere.
  static Matrix path_adjacency(std::size_t n);

  std::size_t size() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Rational value);

  Rational trace() const;
  Matrix mul(const Matrix& o) const;

  // Exact determinant by fraction-free (Bareiss) elimination: rows are
  // scaled to integers, eliminated with exact integer divisions, and the
  // scaling is divided back out at the end.
  Rational det() const;

  // The monic characteristic polynomial det(xI - M) by the
  // Faddeev-LeVerrier trace recursion.
  Polynomial charpoly() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void check_index(std::size_t i, std::size_t j) const;
  std::size_t n_;
  std::vector<Rational> e_;
};

}  // namespace aurea
