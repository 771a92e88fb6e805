#pragma once

#include "dhermite/polynomial.hpp"
#include "dhermite/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dhermite {

/// Row-major dense matrix of exact values.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Leading k x k principal block.
  Matrix leading_block(std::size_t k) const {
    Matrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Determinant by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so each division is
/// exact in the ring (Q or Q[s]). A zero pivot is replaced by a lower row
/// with a nonzero entry in the pivot column; the empty matrix has det 1.
template <class T>
T det_fraction_free(Matrix<T> m) {
  if (!m.is_square()) throw std::invalid_argument("det_fraction_free: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return T(Rational(1));
  const T zero{};
  T prev_pivot(Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == zero) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == zero) ++r;
      if (r == n) return zero;
      m.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev_pivot);
      }
      m(i, k) = zero;
    }
    prev_pivot = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? -det : det;
}

/// Solves A x = b over Q by Gauss-Jordan elimination; nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve_exact(Matrix<Rational> a, std::vector<Rational> b) {
  if (!a.is_square() || a.rows() != b.size()) throw std::invalid_argument("solve_exact: shape mismatch");
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(k, p);
    std::swap(b[k], b[p]);
    const Rational inv = Rational(1) / a(k, k);
    for (std::size_t j = k; j < n; ++j) a(k, j) *= inv;
    b[k] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rational f = a(i, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  return b;
}

}  // namespace dhermite
