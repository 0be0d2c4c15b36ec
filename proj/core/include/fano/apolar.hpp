#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fano/error.hpp"
#include "fano/matrix.hpp"
#include "fano/monomial.hpp"
#include "fano/poly.hpp"

namespace fano {

inline constexpr int kDefaultCap = 8;

/// Coefficient vectors of `rows` (degree d) multiplied by the form g, as rows in degree d + deg g.
template <Field K>
Matrix<K> multiply_rows(const Matrix<K>& rows, int nvars, int d, const MultiPoly<K>& g) {
  const auto& src = monomial_basis(nvars, d);
  const auto& dst = monomial_basis(nvars, d + g.degree());
  Matrix<K> out(rows.rows(), dst.size());
  for (std::size_t r = 0; r < rows.rows(); ++r)
    for (std::size_t i = 0; i < src.size(); ++i) {
      const K& c = rows(r, i);
      if (c.is_zero()) continue;
      for (const auto& [e, ce] : g.terms()) out(r, dst.index_of(src[i] + e)) += c * ce;
    }
  return out;
}

/// Span of x_k * rows for every variable x_k, in degree d + 1 (not reduced).
template <Field K>
Matrix<K> times_linear(const Matrix<K>& rows, int nvars, int d) {
  const auto& src = monomial_basis(nvars, d);
  const auto& dst = monomial_basis(nvars, d + 1);
  Matrix<K> out(rows.rows() * static_cast<std::size_t>(nvars), dst.size());
  for (int k = 0; k < nvars; ++k) {
    const Exponent u = unit_exponent(k);
    for (std::size_t r = 0; r < rows.rows(); ++r)
      for (std::size_t i = 0; i < src.size(); ++i)
        if (!rows(r, i).is_zero())
          out(static_cast<std::size_t>(k) * rows.rows() + r, dst.index_of(src[i] + u)) = rows(r, i);
  }
  return out;
}

/// Homogeneous ideal stored by its graded pieces, each an RREF basis of
/// coefficient rows in the grevlex monomial basis of that degree.
template <Field K>
class GradedIdeal {
 public:
  GradedIdeal() = default;
  GradedIdeal(RingTag ring, int cap) : ring_(ring), cap_(cap) {}

  /// Ideal generated by `gens`, with pieces stored for degrees 0..cap.
  static GradedIdeal generated_by(RingTag ring, const std::vector<MultiPoly<K>>& gens, int cap) {
    GradedIdeal I(ring, cap);
    for (const auto& g : gens)
      if (g.ring() != ring) throw InvalidArgument("ideal generator from a different ring");
    Matrix<K> prev = Matrix<K>::with_width(1);
    for (int d = 0; d <= cap; ++d) {
      Matrix<K> cur = d == 0 ? Matrix<K>::with_width(1) : times_linear(prev, ring.nvars, d - 1);
      for (const auto& g : gens)
        if (g.degree() == d && !g.is_zero()) cur.append_row(g.to_dense());
      prev = cur.rows() ? row_basis(cur) : Matrix<K>::with_width(ring_dimension(ring.nvars, d));
      I.pieces_[d] = prev;
    }
    return I;
  }

  RingTag ring() const { return ring_; }
  int cap() const { return cap_; }
  bool has_piece(int d) const { return pieces_.count(d) != 0; }

  const Matrix<K>& piece(int d) const {
    auto it = pieces_.find(d);
    if (it == pieces_.end()) throw InvalidArgument("graded piece " + std::to_string(d) + " not stored");
    return it->second;
  }
  /// Stores a piece (brought to RREF).
  void set_piece(int d, const Matrix<K>& rows) {
    if (rows.cols() != ring_dimension(ring_.nvars, d)) throw InvalidArgument("set_piece: wrong width");
    pieces_[d] = rows.rows() ? row_basis(rows) : rows;
    cap_ = std::max(cap_, d);
  }

  std::size_t dim(int d) const { return piece(d).rows(); }
  std::size_t quotient_dim(int d) const { return ring_dimension(ring_.nvars, d) - dim(d); }

  /// Hilbert function of the quotient ring through `max_degree` (default: the cap).
  std::vector<std::size_t> quotient_hilbert(int max_degree = -1) const {
    if (max_degree < 0) max_degree = cap_;
    std::vector<std::size_t> hf;
    for (int d = 0; d <= max_degree; ++d) hf.push_back(quotient_dim(d));
    return hf;
  }

  std::vector<MultiPoly<K>> basis_polys(int d) const {
    std::vector<MultiPoly<K>> out;
    const auto& m = piece(d);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      auto v = m.row_vector(r);
      out.push_back(MultiPoly<K>::from_dense(ring_, d, v));
    }
    return out;
  }

  /// True iff every stored piece is contained in the matching piece of `other`.
  bool contained_in(const GradedIdeal& other) const {
    if (ring_ != other.ring_) throw InvalidArgument("ideal containment across rings");
    for (const auto& [d, m] : pieces_) {
      if (!other.has_piece(d)) continue;
      if (!row_span_contains(other.piece(d), m)) return false;
    }
    return true;
  }

  const std::map<int, Matrix<K>>& pieces() const { return pieces_; }

 private:
  RingTag ring_{};
  int cap_ = 0;
  std::map<int, Matrix<K>> pieces_;
};

/// Basis of (f^perp)_d inside the operator ring dual to f's.
template <Field K>
Matrix<K> perp(const MultiPoly<K>& f, int d) {
  if (d < 0) throw InvalidArgument("perp: negative degree");
  if (d > f.degree()) return Matrix<K>::identity(ring_dimension(f.nvars(), d));
  return left_kernel(pairing_matrix(f, d));
}

/// f^perp with pieces for degrees 0..cap.
template <Field K>
GradedIdeal<K> perp_ideal(const MultiPoly<K>& f, int cap = kDefaultCap) {
  GradedIdeal<K> I(f.ring().dual(), cap);
  for (int d = 0; d <= cap; ++d) I.set_piece(d, perp(f, d));
  return I;
}

/// Hilbert function of A^f = T / f^perp, degrees 0..deg f.
template <Field K>
std::vector<std::size_t> hilbert_function(const MultiPoly<K>& f) {
  if (f.is_zero()) throw InvalidArgument("hilbert_function of the zero form");
  std::vector<std::size_t> hf;
  for (int d = 0; d <= f.degree(); ++d) hf.push_back(rank(pairing_matrix(f, d)));
  return hf;
}

/// Cat(f): entry (i, j) = (D_i D_j)(f) over the degree-2 monomials D_i.
template <Field K>
Matrix<K> catalecticant(const MultiPoly<K>& f) {
  if (f.degree() != 4 || f.nvars() != 3) throw InvalidArgument("catalecticant: plane quartic expected");
  const auto& q = monomial_basis(3, 2);
  Matrix<K> cat(q.size(), q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      const Exponent e = q[i] + q[j];
      cat(i, j) = f.coefficient(e) * apolarity_coefficient<K>(e, e);
    }
  return cat;
}

/// Forms g of degree n with D(g) = 0 for every row D of `ops` (degree e <= n),
/// as RREF rows in the basis of S_n.
template <Field K>
Matrix<K> joint_kernel(const Matrix<K>& ops, int nvars, int e, int n) {
  const auto& op_basis = monomial_basis(nvars, e);
  const auto& tgt = monomial_basis(nvars, n - e);
  const auto& src = monomial_basis(nvars, n);
  Matrix<K> cond(ops.rows() * tgt.size(), src.size());
  for (std::size_t r = 0; r < ops.rows(); ++r)
    for (std::size_t a = 0; a < op_basis.size(); ++a) {
      const K& c = ops(r, a);
      if (c.is_zero()) continue;
      for (std::size_t t = 0; t < tgt.size(); ++t) {
        const Exponent b = op_basis[a] + tgt[t];
        cond(r * tgt.size() + t, src.index_of(b)) += c * apolarity_coefficient<K>(op_basis[a], b);
      }
    }
  return kernel(cond);
}

/// Macaulay inverse: the form of degree `socle_degree` annihilated by I in
/// degree socle_degree - 1 (and by I_{socle_degree} too in strict mode),
/// normalised to leading coefficient 1. Throws DegenerateInput unless the
/// solution is unique up to scalar.
template <Field K>
MultiPoly<K> dual_socle(const GradedIdeal<K>& I, int socle_degree = 4, bool strict = false) {
  const int n = socle_degree;
  const int nv = I.ring().nvars;
  Matrix<K> ker = joint_kernel(I.piece(n - 1), nv, n - 1, n);
  if (strict && I.has_piece(n)) {
    Matrix<K> k2 = joint_kernel(I.piece(n), nv, n, n);
    ker = span_intersection(ker, k2);
  }
  if (ker.rows() != 1)
    throw DegenerateInput("dual_socle", "annihilator in degree " + std::to_string(n) + " has dimension " +
                                            std::to_string(ker.rows()) + ", expected 1");
  MultiPoly<K> f = MultiPoly<K>::from_dense(I.ring().dual(), n, ker.row(0));
  return f * f.leading_coefficient().inverse();
}

/// Checks (f^perp : D)_d = (D(f))^perp_d for all d <= deg f - deg D.
template <Field K>
bool colon_perp_check(const MultiPoly<K>& f, const MultiPoly<K>& D) {
  if (D.degree() > f.degree()) throw InvalidArgument("colon_perp_check: deg D > deg f");
  const int nv = f.nvars();
  const MultiPoly<K> Df = apply(D, f);
  for (int d = 0; d <= f.degree() - D.degree(); ++d) {
    // E in T_d with E*D in f^perp, i.e. E*D orthogonal to the complement test vectors
    Matrix<K> mult = multiply_rows(Matrix<K>::identity(ring_dimension(nv, d)), nv, d, D);
    Matrix<K> fp = perp(f, d + D.degree());
    Matrix<K> tests = fp.rows() ? kernel(fp) : Matrix<K>::identity(fp.cols());
    Matrix<K> colon = tests.rows() ? left_kernel(mult * tests.transpose())
                                   : Matrix<K>::identity(ring_dimension(nv, d));
    Matrix<K> rhs = perp(Df, d);
    if (!same_row_span(colon, rhs)) return false;
  }
  return true;
}

}  // namespace fano
