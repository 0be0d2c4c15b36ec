#pragma once

#include <array>
#include <vector>

#include "fano/apolar.hpp"
#include "fano/error.hpp"
#include "fano/matrix.hpp"
#include "fano/poly.hpp"
#include "fano/waring.hpp"

namespace fano {

/// Net of quadrics Q_i = z^T M_i z in the space form variables z0..z3.
template <Field K>
class NetOfQuadrics {
 public:
  NetOfQuadrics() = default;
  explicit NetOfQuadrics(std::array<Matrix<K>, 3> m) : m_(std::move(m)) {
    for (const auto& x : m_)
      if (x.rows() != 4 || !x.is_symmetric()) throw InvalidArgument("net of quadrics: symmetric 4x4 matrices expected");
  }

  static NetOfQuadrics from_quadrics(const std::vector<MultiPoly<K>>& q) {
    if (q.size() != 3) throw InvalidArgument("net of quadrics: three quadrics expected");
    std::array<Matrix<K>, 3> m;
    for (std::size_t i = 0; i < 3; ++i) {
      if (q[i].ring() != kSpaceForms || (q[i].degree() != 2 && !q[i].is_zero()))
        throw InvalidArgument("net of quadrics: quadrics in z0..z3 expected");
      m[i] = q[i].is_zero() ? Matrix<K>(4, 4) : quadric_matrix(q[i]);
    }
    return NetOfQuadrics(m);
  }

  const Matrix<K>& matrix(std::size_t i) const { return m_[i]; }
  const std::array<Matrix<K>, 3>& matrices() const { return m_; }

  MultiPoly<K> quadric(std::size_t i) const {
    MultiPoly<K> q(kSpaceForms, 2);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) q.add_term(unit_exponent(a) + unit_exponent(b), m_[i](static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
    return q;
  }
  std::vector<MultiPoly<K>> quadrics() const { return {quadric(0), quadric(1), quadric(2)}; }

  /// True when the three quadrics are linearly independent.
  bool independent() const {
    Matrix<K> rows = Matrix<K>::with_width(10);
    for (const auto& q : quadrics()) rows.append_row(q.to_dense());
    return rank(rows) == 3;
  }

  template <Field L, class F>
  NetOfQuadrics<L> map(F&& f) const {
    return NetOfQuadrics<L>({m_[0].map(f), m_[1].map(f), m_[2].map(f)});
  }

 private:
  std::array<Matrix<K>, 3> m_;
};

/// (1/2 z1^2 - z0 z2, 1/2 z2^2 - z0 z3, 1/2 z3^2 - z0 z1)
template <Field K>
NetOfQuadrics<K> klein_net() {
  using P = MultiPoly<K>;
  auto z = [](int i) { return P::variable(kSpaceForms, i); };
  const K h = K(1) / K(2);
  return NetOfQuadrics<K>::from_quadrics({h * z(1) * z(1) - z(0) * z(2), h * z(2) * z(2) - z(0) * z(3),
                                          h * z(3) * z(3) - z(0) * z(1)});
}

/// M(u) = u0 M0 + u1 M1 + u2 M2, entries linear in u (plane form variables).
template <Field K>
PolyMatrix<K> net_matrix(const NetOfQuadrics<K>& q) {
  PolyMatrix<K> m(4, 4, kPlaneForms);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      MultiPoly<K> e(kPlaneForms, 1);
      for (int i = 0; i < 3; ++i) e.add_term(unit_exponent(i), q.matrix(static_cast<std::size_t>(i))(r, c));
      m(r, c) = e;
    }
  return m;
}

/// S_q = det M(u). Throws DegenerateInput when it vanishes identically.
template <Field K>
MultiPoly<K> discriminant(const NetOfQuadrics<K>& q) {
  MultiPoly<K> d = determinant(net_matrix(q));
  if (d.is_zero()) throw DegenerateInput("discriminant", "det M(u) vanishes identically");
  return d;
}

template <Field K>
struct JacobianIdeal {
  PolyMatrix<K> matrix;              // 4x3, columns M_i z
  std::vector<MultiPoly<K>> minors;  // the four 3x3 minors
  GradedIdeal<K> ideal;
  std::vector<std::size_t> quotient_hf;  // degrees 0..6
  bool degenerate = false;           // quotient HF differs from 6d-2 in degrees 3..6
};

template <Field K>
JacobianIdeal<K> jacobian_minors(const NetOfQuadrics<K>& q) {
  JacobianIdeal<K> out;
  out.matrix = PolyMatrix<K>(4, 3, kSpaceForms);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t r = 0; r < 4; ++r)
      out.matrix(r, i) = MultiPoly<K>::linear_form(kSpaceForms, q.matrix(i).row_vector(r));
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < 4; ++r)
      if (r != skip) rows.push_back(r);
    MultiPoly<K> m = minor(out.matrix, rows, {0, 1, 2});
    out.minors.push_back(m.is_zero() ? MultiPoly<K>(kSpaceForms, 3) : m);
  }
  out.ideal = GradedIdeal<K>::generated_by(kSpaceForms, out.minors, 6);
  out.quotient_hf = out.ideal.quotient_hilbert(6);
  for (int d = 3; d <= 6; ++d)
    if (out.quotient_hf[static_cast<std::size_t>(d)] != static_cast<std::size_t>(6 * d - 2)) out.degenerate = true;
  return out;
}

/// Rows of the pairing R_d -> k^3, D -> (D(Q_0), D(Q_1), D(Q_2)) for d <= 2.
template <Field K>
Matrix<K> net_pairing(const NetOfQuadrics<K>& q, int d) {
  const auto qs = q.quadrics();
  const std::size_t rows = ring_dimension(4, d);
  const std::size_t w = ring_dimension(4, 2 - d);
  Matrix<K> out(rows, 3 * w);
  for (std::size_t i = 0; i < 3; ++i) {
    Matrix<K> p = pairing_matrix(qs[i], d);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < w; ++c) out(r, i * w + c) = p(r, c);
  }
  return out;
}

template <Field K>
struct QPerp {
  GradedIdeal<K> ideal;                  // in the space operator variables w0..w3
  std::vector<std::size_t> hilbert;      // HF of A^q, degrees 0..cap
  std::vector<MultiPoly<K>> dual_classes;  // D_i in R_2 with D_i(Q_j) = delta_ij
};

/// q^perp and A^q. Throws DegenerateInput unless HF(A^q) = (1,4,3,0,...).
template <Field K>
QPerp<K> q_perp(const NetOfQuadrics<K>& q, int cap = kDefaultCap) {
  require_apolarity_safe<K>("q_perp");
  QPerp<K> out;
  out.ideal = GradedIdeal<K>(kSpaceOperators, cap);
  for (int d = 0; d <= cap; ++d) {
    if (d > 2) {
      out.ideal.set_piece(d, Matrix<K>::identity(ring_dimension(4, d)));
      continue;
    }
    out.ideal.set_piece(d, left_kernel(net_pairing(q, d)));
  }
  out.hilbert = out.ideal.quotient_hilbert(cap);
  if (out.hilbert[0] != 1 || out.hilbert[1] != 4 || out.hilbert[2] != 3) {
    std::string got;
    for (std::size_t d = 0; d < std::min<std::size_t>(4, out.hilbert.size()); ++d)
      got += (got.empty() ? "" : ",") + std::to_string(out.hilbert[d]);
    throw DegenerateInput("q_perp", "HF(A^q) = (" + got + "), expected (1,4,3,0)");
  }
  Matrix<K> p = net_pairing(q, 2);  // 10 x 3
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<K> rhs(3);
    rhs[i] = K(1);
    auto x = solve(p.transpose(), rhs);
    if (!x) throw DegenerateInput("q_perp", "quadrics are linearly dependent");
    out.dual_classes.push_back(MultiPoly<K>::from_dense(kSpaceOperators, 2, *x));
  }
  return out;
}

/// mu_r: W -> U, w -> (<r w, Q_i>)_i, as a 4x3 matrix.
template <Field K>
Matrix<K> mu_matrix(const NetOfQuadrics<K>& q, const MultiPoly<K>& r) {
  if (r.is_zero()) throw InvalidArgument("unstable_plane: r must be nonzero");
  if (r.degree() != 1 || r.nvars() != 4) throw InvalidArgument("unstable_plane: linear form in 4 variables expected");
  const MultiPoly<K> rr = r.ring() == kSpaceOperators ? r : r.retagged(kSpaceOperators);
  const auto qs = q.quadrics();
  Matrix<K> mu(4, 3);
  for (int b = 0; b < 4; ++b) {
    MultiPoly<K> op = rr * MultiPoly<K>::variable(kSpaceOperators, b);
    for (std::size_t i = 0; i < 3; ++i) {
      MultiPoly<K> v = apply(op, qs[i]);
      mu(static_cast<std::size_t>(b), i) = v.coefficient(Exponent{});
    }
  }
  return mu;
}

/// The plane {r = 0} is unstable iff mu_r is not surjective.
template <Field K>
bool unstable_plane(const NetOfQuadrics<K>& q, const MultiPoly<K>& r) {
  return rank(mu_matrix(q, r)) < 3;
}

}  // namespace fano
