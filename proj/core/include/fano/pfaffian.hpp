#pragma once

#include <vector>

#include "fano/error.hpp"
#include "fano/matrix.hpp"
#include "fano/poly.hpp"

namespace fano {

namespace detail {
// expansion along the first remaining index; pf([[0,a],[-a,0]]) = a
template <class T, class Get>
T pfaffian_rec(const std::vector<std::size_t>& idx, const Get& get, const T& zero, const T& one) {
  if (idx.empty()) return one;
  T acc = zero;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    T term = get(idx[0], idx[j]);
    if (term == zero) continue;
    term = term * pfaffian_rec(rest, get, zero, one);
    if (j % 2 == 1) acc = acc + term;
    else acc = acc - term;
  }
  return acc;
}
}  // namespace detail

template <Field K>
K pfaffian(const Matrix<K>& m) {
  if (!m.is_skew()) throw InvalidArgument("pfaffian: matrix is not skew-symmetric");
  if (m.rows() % 2) throw InvalidArgument("pfaffian: odd size");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pfaffian_rec<K>(idx, [&](std::size_t i, std::size_t j) { return m(i, j); }, K(0), K(1));
}

template <Field K>
bool is_skew(const PolyMatrix<K>& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (!(m(i, j) + m(j, i)).is_zero()) return false;
  return true;
}

/// Pfaffian of the principal submatrix on `idx` (even count).
template <Field K>
MultiPoly<K> pfaffian(const PolyMatrix<K>& m, std::vector<std::size_t> idx) {
  if (idx.size() % 2) throw InvalidArgument("pfaffian: odd size");
  const MultiPoly<K> zero(m.ring(), 0);
  const MultiPoly<K> one = MultiPoly<K>::constant(m.ring(), K(1));
  MultiPoly<K> p = detail::pfaffian_rec<MultiPoly<K>>(
      idx, [&](std::size_t i, std::size_t j) { return m(i, j); }, zero, one);
  return p;
}

template <Field K>
MultiPoly<K> pfaffian(const PolyMatrix<K>& m) {
  if (!is_skew(m)) throw InvalidArgument("pfaffian: matrix is not skew-symmetric");
  if (m.rows() % 2) throw InvalidArgument("pfaffian: odd size");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian(m, idx);
}

/// Pfaffians of the principal submatrices obtained by deleting one index each
/// (size - 1 must be even), signed (-1)^i.
template <Field K>
std::vector<MultiPoly<K>> submaximal_pfaffians(const PolyMatrix<K>& m) {
  if (!is_skew(m)) throw InvalidArgument("pfaffian: matrix is not skew-symmetric");
  if (m.rows() % 2 == 0) throw InvalidArgument("submaximal pfaffians need odd size");
  std::vector<MultiPoly<K>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (k != i) idx.push_back(k);
    MultiPoly<K> p = pfaffian(m, idx);
    out.push_back(i % 2 ? -p : p);
  }
  return out;
}

}  // namespace fano
