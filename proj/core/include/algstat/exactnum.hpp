#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace algstat {

using BigInt = mpz_class;
// mpq_class values produced by this library are always canonical (lowest
// terms, positive denominator).
using BigRat = mpq_class;

/// Renders a rational as `n` or `n//d`.
std::string rat_to_string(const BigRat& q);
/// Accepts `n`, `-n`, `n//d` and `n/d`. Throws ParseError otherwise.
BigRat rat_from_string(std::string_view text);

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }
  std::vector<T> col(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  Matrix transpose() const;
  std::vector<T> apply(const std::vector<T>& v) const;

  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRat>;

struct SNFResult {
  IntMatrix S;  // diagonal, d1 | d2 | ... | d_rank, zeros after
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix V;  // unimodular, cols x cols
  std::size_t rank = 0;

  std::vector<BigInt> diagonal() const;
};

/// Computes U*A*V = S. Pivot rule: smallest nonzero absolute value in the
/// remaining block, ties broken by row then column index.
SNFResult smith_normal_form(const IntMatrix& a);

/// Integer basis of {v in Z^cols : A v = 0}. The basis spans the full
/// (saturated) kernel lattice.
std::vector<std::vector<BigInt>> lattice_kernel(const IntMatrix& a);

/// Reduced row echelon form in place; returns pivot columns (ascending).
std::vector<std::size_t> rref(RatMatrix& m);
std::size_t rank(RatMatrix m);

/// Right nullspace basis: one vector per free column, with that entry equal to
/// 1 and the pivot entries read off the reduced echelon form.
std::vector<std::vector<BigRat>> rational_nullspace(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& a);

}  // namespace algstat
