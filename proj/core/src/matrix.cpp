#include "aurea/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "aurea/errors.hpp"

namespace aurea {

namespace {
constexpr std::size_t kMaxDimension = 12;
}

Matrix::Matrix(std::size_t n) : n_(n), e_(n * n) {
  if (n < 1 || n > kMaxDimension)
    throw Error(Errc::dimension_out_of_range,
                "matrix dimension must be between 1 and " +
                    std::to_string(kMaxDimension) + ", got " +
                    std::to_string(n));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

Matrix Matrix::path_adjacency(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m.set(i, i + 1, Rational(1));
    m.set(i + 1, i, Rational(1));
  }
  return m;
}

void Matrix::check_index(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("matrix index");
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return e_[i * n_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, Rational value) {
  check_index(i, j);
  e_[i * n_ + j] = std::move(value);
}

Rational Matrix::trace() const {
  Rational t(0);
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (o.n_ != n_) throw std::logic_error("matrix size mismatch");
  Matrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        out.e_[i * n_ + j] += a * o.at(k, j);
    }
  return out;
}

Rational Matrix::det() const {
  // Scale each row to integers; det = det(integer matrix) / product.
  std::vector<Int> z(n_ * n_);
  Int row_scales(1);
  for (std::size_t i = 0; i < n_; ++i) {
    Int l(1);
    for (std::size_t j = 0; j < n_; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              at(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < n_; ++j)
      z[i * n_ + j] = at(i, j).numerator() * (l / at(i, j).denominator());
    row_scales *= l;
  }

  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (z[k * n_ + k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n_ && z[pivot * n_ + k] == 0) ++pivot;
      if (pivot == n_) return Rational(0);
      for (std::size_t j = 0; j < n_; ++j)
        std::swap(z[k * n_ + j], z[pivot * n_ + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        Int t = z[i * n_ + j] * z[k * n_ + k] - z[i * n_ + k] * z[k * n_ + j];
        mpz_divexact(z[i * n_ + j].get_mpz_t(), t.get_mpz_t(),
                     prev.get_mpz_t());
      }
      z[i * n_ + k] = 0;
    }
    prev = z[k * n_ + k];
  }
  Int d = z[(n_ - 1) * n_ + (n_ - 1)];
  if (sign < 0) d = -d;
  return Rational(d, row_scales);
}

Polynomial Matrix::charpoly() const {
  // det(xI - M) = x^n + c_1 x^(n-1) + ... + c_n with
  //   A_1 = M,                 c_k = -trace(A_k) / k,
  //   A_k = M (A_{k-1} + c_{k-1} I).
  std::vector<Rational> coeffs(n_ + 1);
  coeffs[n_] = Rational(1);
  Matrix ak = *this;
  Rational ck = -ak.trace();
  coeffs[n_ - 1] = ck;
  for (std::size_t k = 2; k <= n_; ++k) {
    Matrix shifted = ak;
    for (std::size_t i = 0; i < n_; ++i)
      shifted.set(i, i, shifted.at(i, i) + ck);
    ak = mul(shifted);
    ck = -(ak.trace() / Rational(static_cast<long>(k)));
    coeffs[n_ - k] = ck;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace aurea
