#include "algstat/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "algstat/error.hpp"

namespace algstat {

std::string rat_to_string(const BigRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "//" + q.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_int(std::string_view s) {
  if (!valid_integer(s)) throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRat rat_from_string(std::string_view text) {
  std::size_t sep = text.find("//");
  std::size_t skip = 2;
  if (sep == std::string_view::npos) {
    sep = text.find('/');
    skip = 1;
  }
  if (sep == std::string_view::npos) return BigRat(parse_int(text));
  BigInt num = parse_int(text.substr(0, sep));
  BigInt den = parse_int(text.substr(sep + skip));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

// ---- Matrix ---------------------------------------------------------------

template <class T>
Matrix<T>::Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::SchemaMismatch, "matrix entry count does not match shape");
  }
}

template <class T>
std::vector<T> Matrix<T>::col(std::size_t c) const {
  std::vector<T> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

template <class T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <class T>
std::vector<T> Matrix<T>::apply(const std::vector<T>& v) const {
  std::vector<T> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    T acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::SchemaMismatch, "matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template class Matrix<BigInt>;
template class Matrix<BigRat>;
template Matrix<BigInt> operator*(const Matrix<BigInt>&, const Matrix<BigInt>&);
template Matrix<BigRat> operator*(const Matrix<BigRat>&, const Matrix<BigRat>&);

// ---- Smith normal form ----------------------------------------------------

std::vector<BigInt> SNFResult::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

namespace {

// Row operation row[dst] -= q * row[src], mirrored on the left transform.
void row_axpy(IntMatrix& a, IntMatrix& u, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) -= q * a(src, c);
  for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) -= q * u(src, c);
}

void col_axpy(IntMatrix& a, IntMatrix& v, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) -= q * a(r, src);
  for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) -= q * v(r, src);
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& a, std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t r = k; r < a.rows(); ++r)
    for (std::size_t c = k; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      BigInt v = abs(a(r, c));
      if (!best || v < best_abs) {
        best = {r, c};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t k = 0;
  for (; k < limit; ++k) {
    auto pivot = smallest_pivot(a, k);
    if (!pivot) break;
    for (;;) {
      a.swap_rows(k, pivot->first);
      u.swap_rows(k, pivot->first);
      a.swap_cols(k, pivot->second);
      v.swap_cols(k, pivot->second);

      bool residue = false;
      for (std::size_t r = k + 1; r < a.rows(); ++r) {
        if (a(r, k) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, k).get_mpz_t(), a(k, k).get_mpz_t());
        row_axpy(a, u, r, k, q);
        if (a(r, k) != 0) residue = true;
      }
      for (std::size_t c = k + 1; c < a.cols(); ++c) {
        if (a(k, c) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a(k, c).get_mpz_t(), a(k, k).get_mpz_t());
        col_axpy(a, v, c, k, q);
        if (a(k, c) != 0) residue = true;
      }
      if (!residue) {
        // Pivot row/column are clear; enforce divisibility of the remaining block.
        std::optional<std::size_t> bad_row;
        for (std::size_t r = k + 1; r < a.rows() && !bad_row; ++r)
          for (std::size_t c = k + 1; c < a.cols(); ++c)
            if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(k, k).get_mpz_t())) {
              bad_row = r;
              break;
            }
        if (!bad_row) break;
        row_axpy(a, u, k, *bad_row, BigInt(-1));
      }
      // Restrict the next pivot search to row k / column k of the block.
      std::optional<std::pair<std::size_t, std::size_t>> next;
      BigInt best_abs;
      auto consider = [&](std::size_t r, std::size_t c) {
        if (a(r, c) == 0) return;
        BigInt val = abs(a(r, c));
        if (!next || val < best_abs || (val == best_abs && std::pair{r, c} < *next)) {
          next = {r, c};
          best_abs = val;
        }
      };
      for (std::size_t c = k; c < a.cols(); ++c) consider(k, c);
      for (std::size_t r = k + 1; r < a.rows(); ++r) consider(r, k);
      pivot = next;
    }
    if (a(k, k) < 0) {
      for (std::size_t c = 0; c < a.cols(); ++c) a(k, c) = -a(k, c);
      for (std::size_t c = 0; c < u.cols(); ++c) u(k, c) = -u(k, c);
    }
  }
  return SNFResult{std::move(a), std::move(u), std::move(v), k};
}

std::vector<std::vector<BigInt>> lattice_kernel(const IntMatrix& a) {
  SNFResult snf = smith_normal_form(a);
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t c = snf.rank; c < a.cols(); ++c) basis.push_back(snf.V.col(c));
  return basis;
}

// ---- rational linear algebra ---------------------------------------------

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(row, sel);
    if (m(row, col) != 1) {
      BigRat inv = 1 / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      BigRat f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (m(row, c) != 0) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<std::vector<BigRat>> rational_nullspace(const RatMatrix& input) {
  RatMatrix m = input;
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<BigRat>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRat> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

BigInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::SchemaMismatch, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      a.swap_rows(k, sel);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace algstat
