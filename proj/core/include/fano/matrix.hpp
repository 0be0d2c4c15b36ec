#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "fano/error.hpp"
#include "fano/field.hpp"

namespace fano {

/// Dense row-major matrix over an exact field.
template <Field K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<K>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw InvalidArgument("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<K> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const K> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<K> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  /// Appends a row; an empty matrix adopts the row's width.
  void append_row(std::span<const K> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw InvalidArgument("append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }
  void append_row(const std::vector<K>& r) { append_row(std::span<const K>(r)); }

  /// Appends all rows of another matrix with the same width.
  void append_rows(const Matrix& other) {
    if (other.rows_ == 0) return;
    if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
    if (other.cols_ != cols_) throw InvalidArgument("append_rows: width mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
  }

  /// Empty matrix of the given width (zero rows).
  static Matrix with_width(std::size_t cols) {
    Matrix m;
    m.cols_ = cols;
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix s(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
    return s;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& v) { return v.is_zero(); });
  }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }
  bool is_skew() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if (!((*this)(i, j) == -(*this)(j, i))) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const {
    using R = decltype(f(std::declval<const K&>()));
    Matrix<R> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const K& s, Matrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j).str();
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

/// In-place reduction to reduced row-echelon form; zero rows are dropped.
/// Returns the pivot columns (strictly increasing).
template <Field K>
std::vector<std::size_t> reduce_rows(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    const K inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const K f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < rows) m = m.submatrix(0, 0, r, cols);
  return pivots;
}

template <Field K>
struct Rref {
  Matrix<K> reduced;                 // nonzero rows of the RREF
  std::vector<std::size_t> pivots;   // pivot column of each row
  Matrix<K> kernel_basis;            // right kernel, itself in RREF

  std::size_t rank() const { return pivots.size(); }
};

namespace detail {
template <Field K>
Matrix<K> kernel_from_reduced(const Matrix<K>& reduced, const std::vector<std::size_t>& pivots,
                              std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<K> ker = Matrix<K>::with_width(cols);
  std::vector<K> v(cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), K(0));
    v[f] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
    ker.append_row(v);
  }
  reduce_rows(ker);
  return ker;
}
}  // namespace detail

/// Rank, pivot columns, and a canonical (RREF) basis of the right kernel.
template <Field K>
Rref<K> rref(Matrix<K> m) {
  const std::size_t cols = m.cols();
  Rref<K> out;
  out.pivots = reduce_rows(m);
  out.kernel_basis = detail::kernel_from_reduced(m, out.pivots, cols);
  out.reduced = std::move(m);
  return out;
}

template <Field K>
std::size_t rank(Matrix<K> m) {
  return reduce_rows(m).size();
}

/// Canonical basis (RREF rows) of the row span.
template <Field K>
Matrix<K> row_basis(Matrix<K> m) {
  reduce_rows(m);
  return m;
}

/// Canonical basis of {v : m v = 0}, as rows.
template <Field K>
Matrix<K> kernel(const Matrix<K>& m) {
  Matrix<K> r = m;
  auto piv = reduce_rows(r);
  return detail::kernel_from_reduced(r, piv, m.cols());
}

/// Canonical basis of {c : c^T m = 0}, as rows.
template <Field K>
Matrix<K> left_kernel(const Matrix<K>& m) {
  return kernel(m.transpose());
}

template <Field K>
K determinant(Matrix<K> m) {
  if (!m.is_square()) throw InvalidArgument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  K det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c).is_zero()) ++sel;
    if (sel == n) return K(0);
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const K inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const K f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <Field K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  auto piv = reduce_rows(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  return aug.submatrix(0, n, n, n);
}

/// Particular solution of a x = b with free variables set to zero, if consistent.
template <Field K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
  if (b.size() != a.rows()) throw InvalidArgument("solve: right-hand side length mismatch");
  Matrix<K> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = reduce_rows(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  std::vector<K> x(a.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return x;
}

/// Reduces `v` against an RREF basis (eliminates the basis pivots from v).
template <Field K>
void reduce_against(std::span<K> v, const Matrix<K>& basis, const std::vector<std::size_t>& pivots) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const K f = v[pivots[r]];
    if (f.is_zero()) continue;
    auto br = basis.row(r);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!br[j].is_zero()) v[j] -= f * br[j];
  }
}

template <Field K>
std::vector<std::size_t> pivot_columns(const Matrix<K>& rref_rows) {
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < rref_rows.rows(); ++i) {
    auto r = rref_rows.row(i);
    auto it = std::find_if(r.begin(), r.end(), [](const K& x) { return !x.is_zero(); });
    piv.push_back(static_cast<std::size_t>(it - r.begin()));
  }
  return piv;
}

/// True iff every row of `sub` lies in the row span of `space`.
template <Field K>
bool row_span_contains(const Matrix<K>& space, const Matrix<K>& sub) {
  if (sub.rows() == 0) return true;
  if (space.rows() == 0) return sub.is_zero();
  Matrix<K> both = space;
  both.append_rows(sub);
  return rank(std::move(both)) == rank(space);
}

template <Field K>
bool same_row_span(const Matrix<K>& a, const Matrix<K>& b) {
  const std::size_t width = std::max(a.cols(), b.cols());
  Matrix<K> ra = a.rows() ? row_basis(a) : Matrix<K>::with_width(width);
  Matrix<K> rb = b.rows() ? row_basis(b) : Matrix<K>::with_width(width);
  return ra.rows() == rb.rows() && (ra.rows() == 0 || ra == rb);
}

/// Canonical complement of span(sub) inside span(space): rows of `space`
/// reduced modulo `sub`, then brought to RREF.
template <Field K>
Matrix<K> complement(const Matrix<K>& sub, const Matrix<K>& space) {
  Matrix<K> s = row_basis(sub);
  auto piv = pivot_columns(s);
  Matrix<K> out = Matrix<K>::with_width(space.cols());
  for (std::size_t i = 0; i < space.rows(); ++i) {
    auto v = space.row_vector(i);
    if (s.rows()) reduce_against(std::span<K>(v), s, piv);
    out.append_row(v);
  }
  reduce_rows(out);
  return out;
}

/// Row-span intersection as a canonical basis.
template <Field K>
Matrix<K> span_intersection(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() == 0 || b.rows() == 0) return Matrix<K>::with_width(a.cols());
  // x a = y b  <=>  [x, -y] [a; b] = 0
  Matrix<K> stacked = a;
  stacked.append_rows(b);
  Matrix<K> lk = left_kernel(stacked);
  Matrix<K> out = Matrix<K>::with_width(a.cols());
  for (std::size_t i = 0; i < lk.rows(); ++i) {
    std::vector<K> v(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const K c = lk(i, r);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) v[j] += c * a(r, j);
    }
    out.append_row(v);
  }
  reduce_rows(out);
  return out;
}

/// Exact Sylvester criterion: all leading principal minors positive.
/// Throws InvalidArgument for non-symmetric input.
bool is_positive_definite(const Matrix<Rational>& m);

template <Field K>
std::vector<K> mat_vec(const Matrix<K>& m, const std::vector<K>& v) {
  if (v.size() != m.cols()) throw InvalidArgument("mat_vec: length mismatch");
  std::vector<K> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

/// Entrywise image of a rational matrix in K.
template <Field K>
Matrix<K> reduce_matrix(const Matrix<Rational>& m) {
  Matrix<K> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      try {
        out(i, j) = from_rational<K>(m(i, j));
      } catch (const InvalidArgument& e) {
        throw InvalidArgument("entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what());
      }
    }
  return out;
}

}  // namespace fano
