#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "fano/fano.hpp"

namespace fano::test {

using Q = Rational;
using F11 = Fp<11>;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

template <Field K>
K rand_scalar(long lo = -5, long hi = 5) {
  return K(rand_int(lo, hi));
}

template <Field K>
MultiPoly<K> rand_form(RingTag ring, int degree, long lo = -5, long hi = 5) {
  MultiPoly<K> f(ring, degree);
  for (const auto& e : monomial_basis(ring.nvars, degree).monomials()) f.add_term(e, rand_scalar<K>(lo, hi));
  return f;
}

template <Field K>
MultiPoly<K> rand_nonzero_form(RingTag ring, int degree) {
  for (;;) {
    auto f = rand_form<K>(ring, degree);
    if (!f.is_zero()) return f;
  }
}

template <Field K>
Point<K> rand_point(int n) {
  for (;;) {
    std::vector<K> c;
    for (int i = 0; i < n; ++i) c.push_back(rand_scalar<K>());
    if (std::any_of(c.begin(), c.end(), [](const K& x) { return !x.is_zero(); })) return Point<K>(c);
  }
}

template <Field K>
Matrix<K> rand_matrix(std::size_t r, std::size_t c, long lo = -5, long hi = 5) {
  Matrix<K> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_scalar<K>(lo, hi);
  return m;
}

template <Field K>
Matrix<K> rand_skew(std::size_t n) {
  Matrix<K> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = rand_scalar<K>();
      m(j, i) = -m(i, j);
    }
  return m;
}

inline MultiPoly<Q> klein_quartic() { return parse_poly("x0^3*x1 + x1^3*x2 + x2^3*x0", kPlaneForms); }

/// Ordinary partial derivative d/dx_i, coded separately from the apolarity kernel.
template <Field K>
MultiPoly<K> naive_diff(const MultiPoly<K>& f, int i) {
  MultiPoly<K> out(f.ring(), std::max(0, f.degree() - 1));
  for (const auto& [e, c] : f.terms()) {
    const int k = e[static_cast<std::size_t>(i)];
    if (!k) continue;
    Exponent d = e;
    d[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k - 1);
    out.add_term(d, c * K(k));
  }
  return out;
}

/// D applied to f by repeated naive differentiation (operator coefficients times monomial derivatives).
template <Field K>
MultiPoly<K> naive_apply(const MultiPoly<K>& D, const MultiPoly<K>& f) {
  MultiPoly<K> out(f.ring(), std::max(0, f.degree() - D.degree()));
  if (D.degree() > f.degree()) return out;
  for (const auto& [e, c] : D.terms()) {
    MultiPoly<K> g = f;
    for (int v = 0; v < f.nvars(); ++v)
      for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) g = naive_diff(g, v);
    if (!g.is_zero()) out += c * g;
  }
  return out;
}

/// HF of A^f as ranks of the spaces of partial derivatives of f.
template <Field K>
std::vector<std::size_t> naive_hf(const MultiPoly<K>& f) {
  std::vector<std::size_t> hf;
  const int n = f.degree();
  for (int d = 0; d <= n; ++d) {
    Matrix<K> rows = Matrix<K>::with_width(ring_dimension(f.nvars(), d));
    for (const auto& e : monomial_basis(f.nvars(), n - d).monomials()) {
      MultiPoly<K> g = f;
      for (int v = 0; v < f.nvars(); ++v)
        for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) g = naive_diff(g, v);
      if (!g.is_zero()) rows.append_row(g.to_dense());
    }
    hf.push_back(rank(rows));
  }
  return hf;
}

/// Leibniz expansion.
template <Field K>
K leibniz_det(const Matrix<K>& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  K total(0);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    K t(inv % 2 ? -1 : 1);
    for (std::size_t i = 0; i < p.size(); ++i) t *= m(i, p[i]);
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Gaussian binomial [n choose k]_q.
inline std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t j = 0; j < n - i; ++j) a *= q;
    for (std::uint64_t j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

/// Net with small random integer matrices, retried until it has the generic
/// q^perp resolution shape.
inline NetOfQuadrics<Q> rand_general_net() {
  for (;;) {
    std::array<Matrix<Q>, 3> m;
    for (auto& x : m) {
      x = Matrix<Q>(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) {
          x(i, j) = rand_scalar<Q>(-3, 3);
          x(j, i) = x(i, j);
        }
    }
    NetOfQuadrics<Q> q(m);
    if (!q.independent()) continue;
    try {
      if (has_net_shape(min_res(q_perp(q).ideal))) return q;
    } catch (const DegenerateInput&) {
    }
  }
}

/// The Klein SkewNet over Q, with its V_q basis.
inline const SkewNet<Q>& klein_eta() {
  static const SkewNet<Q> eta = eta_from_tor(min_res(q_perp(klein_net<Q>()).ideal));
  return eta;
}

/// Isotropic points of the Klein SkewNet over F_11 (computed once).
inline const std::vector<SubspaceE<F11>>& klein_points_f11() {
  static const std::vector<SubspaceE<F11>> pts = enumerate_points(reduce_mod<F11>(primitive_integral(klein_eta())));
  return pts;
}

}  // namespace fano::test
