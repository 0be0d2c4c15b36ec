#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fano/apolar.hpp"
#include "fano/error.hpp"
#include "fano/matrix.hpp"
#include "fano/netquad.hpp"
#include "fano/pfaffian.hpp"
#include "fano/poly.hpp"
#include "fano/resolve.hpp"

namespace fano {

/// Net of alternating forms eta: Lambda^2 V -> N, dim V = 7, dim N = 3.
/// forms[k](i, j) is the k-th coordinate of eta(v_i ^ v_j).
template <Field K>
struct SkewNet {
  std::array<Matrix<K>, 3> forms;
  std::optional<Matrix<K>> v_basis;     // 7 x 10: the quadrics of V_q over R_2
  std::optional<Matrix<K>> n_to_udual;  // 3 x 3: N-coordinates -> U-coordinates

  SkewNet() : forms{Matrix<K>(7, 7), Matrix<K>(7, 7), Matrix<K>(7, 7)} {}
  explicit SkewNet(std::array<Matrix<K>, 3> f) : forms(std::move(f)) { validate(); }

  void validate() const {
    for (const auto& m : forms)
      if (m.rows() != 7 || !m.is_skew()) throw InvalidArgument("skew net: 7x7 skew matrices expected");
  }
  bool is_zero() const { return forms[0].is_zero() && forms[1].is_zero() && forms[2].is_zero(); }

  /// eta(u ^ v) in N-coordinates.
  std::array<K, 3> eval(std::span<const K> u, std::span<const K> v) const {
    std::array<K, 3> out{};
    for (std::size_t k = 0; k < 3; ++k) {
      K acc(0);
      for (std::size_t i = 0; i < 7; ++i) {
        if (u[i].is_zero()) continue;
        K row(0);
        for (std::size_t j = 0; j < 7; ++j) row += forms[k](i, j) * v[j];
        acc += u[i] * row;
      }
      out[k] = acc;
    }
    return out;
  }

  /// Congruence g * eta_k * g^T (new basis vectors are the rows of g).
  SkewNet congruent(const Matrix<K>& g) const {
    SkewNet s({g * forms[0] * g.transpose(), g * forms[1] * g.transpose(), g * forms[2] * g.transpose()});
    if (v_basis) s.v_basis = g * *v_basis;
    s.n_to_udual = n_to_udual;
    return s;
  }
};

/// A 3-dimensional subspace of V, stored as its RREF basis.
template <Field K>
class SubspaceE {
 public:
  SubspaceE() = default;
  explicit SubspaceE(const Matrix<K>& rows) : rows_(row_basis(rows)) {
    if (rows_.rows() != 3 || rows_.cols() != 7) throw InvalidArgument("subspace E: rank 3 in a 7-space expected");
  }
  /// Takes rows already in RREF without re-reducing.
  static SubspaceE from_canonical(Matrix<K> rows) {
    SubspaceE e;
    e.rows_ = std::move(rows);
    return e;
  }
  const Matrix<K>& rows() const { return rows_; }
  friend bool operator==(const SubspaceE& a, const SubspaceE& b) { return a.rows_ == b.rows_; }

 private:
  Matrix<K> rows_;
};

/// Lexicographic order on the canonical rows (for deterministic sorting).
template <Field K>
bool canonical_less(const Matrix<K>& a, const Matrix<K>& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == b(i, j)) continue;
      if constexpr (std::same_as<K, Rational>) return a(i, j) < b(i, j);
      else return a(i, j).value() < b(i, j).value();
    }
  return false;
}

template <Field K>
bool isotropic(const SkewNet<K>& eta, const Matrix<K>& rows) {
  for (std::size_t a = 0; a < rows.rows(); ++a)
    for (std::size_t b = a + 1; b < rows.rows(); ++b) {
      auto v = eta.eval(rows.row(a), rows.row(b));
      if (!v[0].is_zero() || !v[1].is_zero() || !v[2].is_zero()) return false;
    }
  return true;
}

template <Field K>
bool isotropic(const SkewNet<K>& eta, const SubspaceE<K>& e) {
  return isotropic(eta, e.rows());
}

/// eta_q from the Tor algebra: the Koszul relation p_j e_i - p_i e_j of two
/// quadrics of V_q is written in the degree-4 part of the second syzygies; its
/// coordinates on the three minimal degree-4 generators are eta(p_i ^ p_j).
template <Field K>
SkewNet<K> eta_from_tor(const Resolution<K>& res) {
  if (!has_net_shape(res)) throw DegenerateInput("eta_from_tor", "resolution does not have the net shape");
  const GradedFree& F1 = res.modules[1];
  const GradedFree& F2 = res.modules[2];
  Matrix<K> phi2 = res.map_in_degree(1, 4);  // (F2)_4 x (F1)_4
  if (rank(phi2) != phi2.rows()) throw DegenerateInput("eta_from_tor", "non-minimal resolution input");
  Matrix<K> phi2t = phi2.transpose();
  Matrix<K> v_basis(7, 10);
  for (std::size_t i = 0; i < 7; ++i) {
    auto v = res.maps[0](i, 0).to_dense();
    for (std::size_t c = 0; c < 10; ++c) v_basis(i, c) = v[c];
  }
  std::array<Matrix<K>, 3> forms{Matrix<K>(7, 7), Matrix<K>(7, 7), Matrix<K>(7, 7)};
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) {
      std::vector<K> koszul(F1.dim(4));
      const std::size_t oi = F1.offset(4, i), oj = F1.offset(4, j);
      for (std::size_t c = 0; c < 10; ++c) {
        koszul[oi + c] = v_basis(j, c);
        koszul[oj + c] = -v_basis(i, c);
      }
      auto x = solve(phi2t, koszul);
      if (!x) throw DegenerateInput("eta_from_tor", "Koszul relation is not in the image of the syzygies");
      for (std::size_t k = 0; k < 3; ++k) {
        const K c = (*x)[F2.offset(4, 8 + k)];
        forms[k](i, j) = c;
        forms[k](j, i) = -c;
      }
    }
  SkewNet<K> eta(forms);
  eta.v_basis = v_basis;
  return eta;
}

/// Sum_k eta_k d_k: a 7x7 skew matrix of linear forms in the plane operator variables.
template <Field K>
PolyMatrix<K> skew_matrix_of_forms(const SkewNet<K>& eta) {
  PolyMatrix<K> m(7, 7, kPlaneOperators);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      MultiPoly<K> e(kPlaneOperators, 1);
      for (int k = 0; k < 3; ++k) e.add_term(unit_exponent(k), eta.forms[static_cast<std::size_t>(k)](i, j));
      m(i, j) = e;
    }
  return m;
}

/// The 4x3 block psi of sum_k eta_k d_k in a basis of V that starts with E;
/// the upper 3x3 block vanishes because E is isotropic.
template <Field K>
PolyMatrix<K> hexagon_block(const SkewNet<K>& eta, const SubspaceE<K>& e) {
  if (!isotropic(eta, e)) throw InvalidArgument("hexagon_block: E is not isotropic");
  Matrix<K> g = e.rows();
  g.append_rows(complement(e.rows(), Matrix<K>::identity(7)));
  SkewNet<K> plain(eta.forms);
  PolyMatrix<K> m = skew_matrix_of_forms(plain.congruent(g));
  PolyMatrix<K> psi(4, 3, kPlaneOperators);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) psi(i, j) = m(3 + i, j);
  return psi;
}

template <Field K>
struct PfaffianIdeal {
  std::vector<MultiPoly<K>> generators;  // 7 cubics in d0..d2
  GradedIdeal<K> ideal;
  std::vector<std::size_t> quotient_hf;  // degrees 0..5
};

/// The 7 principal 6x6 pfaffians of sum_k eta_k d_k.
template <Field K>
PfaffianIdeal<K> pfaffian_ideal(const SkewNet<K>& eta, int cap = 5) {
  PfaffianIdeal<K> out;
  out.generators = submaximal_pfaffians(skew_matrix_of_forms(eta));
  for (auto& g : out.generators)
    if (g.is_zero()) g = MultiPoly<K>(kPlaneOperators, 3);
  out.ideal = GradedIdeal<K>::generated_by(kPlaneOperators, out.generators, cap);
  out.quotient_hf = out.ideal.quotient_hilbert(cap);
  return out;
}

/// Solves p = r * s for a linear form s.
template <Field K>
std::optional<MultiPoly<K>> divide_by_linear(const MultiPoly<K>& p, const MultiPoly<K>& r) {
  if (r.is_zero() || r.degree() != 1) throw InvalidArgument("divide_by_linear: nonzero linear divisor expected");
  const int nv = p.nvars();
  Matrix<K> mult = multiply_rows(Matrix<K>::identity(static_cast<std::size_t>(nv)), nv, 1, r);
  auto s = solve(mult.transpose(), p.to_dense());
  if (!s) return std::nullopt;
  return MultiPoly<K>::linear_form(p.ring(), *s);
}

/// Common linear factor of two independent quadrics: p1 = r r1, p2 = r r2.
template <Field K>
struct QuadricFactor {
  MultiPoly<K> r, r1, r2;
};

template <Field K>
std::optional<QuadricFactor<K>> common_linear_factor(const MultiPoly<K>& p1, const MultiPoly<K>& p2) {
  Matrix<K> syz = linear_syzygies<K>({p1, p2});
  if (syz.rows() != 1) return std::nullopt;
  const int nv = p1.nvars();
  std::vector<K> a(syz.row(0).begin(), syz.row(0).begin() + nv);
  std::vector<K> b(syz.row(0).begin() + nv, syz.row(0).end());
  // a p1 + b p2 = 0 with p1 = r r1, p2 = r r2 forces (a, b) ~ (r2, -r1)
  MultiPoly<K> r1 = -MultiPoly<K>::linear_form(p1.ring(), b);
  MultiPoly<K> r2 = MultiPoly<K>::linear_form(p1.ring(), a);
  if (r1.is_zero() || r2.is_zero()) return std::nullopt;
  auto r = divide_by_linear(p1, r1);
  if (!r || r->is_zero()) return std::nullopt;
  if (!(*r * r2 == p2)) return std::nullopt;
  return QuadricFactor<K>{*r, r1, r2};
}

template <Field K>
MultiPoly<K> quadric_of(const Matrix<K>& v_basis, std::span<const K> coords) {
  std::vector<K> acc(10);
  for (std::size_t i = 0; i < 7; ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t c = 0; c < 10; ++c) acc[c] += coords[i] * v_basis(i, c);
  }
  return MultiPoly<K>::from_dense(kSpaceOperators, 2, acc);
}
template <Field K>
MultiPoly<K> quadric_of(const Matrix<K>& v_basis, const std::vector<K>& coords) {
  return quadric_of(v_basis, std::span<const K>(coords));
}

enum class CubicStatus { Valid, NotTwistedCubic, Degenerate };

inline const char* to_string(CubicStatus s) {
  switch (s) {
    case CubicStatus::Valid: return "valid";
    case CubicStatus::NotTwistedCubic: return "not_twisted_cubic";
    default: return "degenerate";
  }
}

template <Field K>
struct TwistedCubic {
  CubicStatus status = CubicStatus::NotTwistedCubic;
  std::vector<MultiPoly<K>> quadrics;    // p_1, p_2, p_3
  std::size_t syzygy_count = 0;
  PolyMatrix<K> tau2;                    // 2x3 linear forms
  bool minors_regenerate = false;
  std::vector<std::size_t> quotient_hf;  // degrees 0..4
};

/// Hilbert-Burch check for the quadrics spanned by E.
template <Field K>
TwistedCubic<K> twisted_cubic(const Matrix<K>& v_basis, const SubspaceE<K>& e) {
  require_apolarity_safe<K>("twisted_cubic");
  TwistedCubic<K> out;
  for (std::size_t i = 0; i < 3; ++i) out.quadrics.push_back(quadric_of(v_basis, e.rows().row(i)));
  Matrix<K> syz = linear_syzygies(out.quadrics);
  out.syzygy_count = syz.rows();
  GradedIdeal<K> ideal = GradedIdeal<K>::generated_by(kSpaceOperators, out.quadrics, 4);
  out.quotient_hf = ideal.quotient_hilbert(4);
  if (syz.rows() != 2) {
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) {
        auto f = common_linear_factor(out.quadrics[a], out.quadrics[b]);
        if (f && divide_by_linear(out.quadrics[3 - a - b], f->r)) out.status = CubicStatus::Degenerate;
      }
    return out;
  }
  out.tau2 = PolyMatrix<K>(2, 3, kSpaceOperators);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<K> l(syz.row(s).begin() + static_cast<std::ptrdiff_t>(4 * i),
                       syz.row(s).begin() + static_cast<std::ptrdiff_t>(4 * i + 4));
      out.tau2(s, i) = MultiPoly<K>::linear_form(kSpaceOperators, l);
    }
  Matrix<K> minors = Matrix<K>::with_width(10);
  for (std::size_t c0 = 0; c0 < 3; ++c0)
    for (std::size_t c1 = c0 + 1; c1 < 3; ++c1) {
      MultiPoly<K> m = minor(out.tau2, {0, 1}, {c0, c1});
      if (!m.is_zero()) minors.append_row(m.to_dense());
    }
  Matrix<K> spanE = Matrix<K>::with_width(10);
  for (const auto& p : out.quadrics) spanE.append_row(p.to_dense());
  out.minors_regenerate = rank(minors) == 3 && same_row_span(minors, spanE);
  const std::vector<std::size_t> want = {1, 4, 7, 10, 13};
  if (rank(minors) < 3) out.status = CubicStatus::Degenerate;
  else if (out.minors_regenerate && out.quotient_hf == want) out.status = CubicStatus::Valid;
  else out.status = CubicStatus::NotTwistedCubic;
  return out;
}

/// A line on G(3, V, eta): the pencil p1 ^ p2 ^ (alpha p3 + beta p4).
template <Field K>
struct LineInX {
  SubspaceE<K> e1, e2;
  std::array<std::vector<K>, 4> pencil;  // p1..p4 as coordinate vectors in V
  MultiPoly<K> r, r1, r2;                // p1 = r r1, p2 = r r2 in R_2
};

enum class LineStatus { Line, NotIntersecting, NoCommonFactor };

inline const char* to_string(LineStatus s) {
  switch (s) {
    case LineStatus::Line: return "line";
    case LineStatus::NotIntersecting: return "not_intersecting";
    default: return "no_common_factor";
  }
}

template <Field K>
struct LineDetection {
  LineStatus status = LineStatus::NotIntersecting;
  std::optional<LineInX<K>> line;
};

/// Zero pattern of a basis adapted to the line: eta(p_a ^ p_b) = 0 for
/// a, b in {1..4} except (3,4).
template <Field K>
bool has_line_block_shape(const SkewNet<K>& eta, const std::array<std::vector<K>, 4>& p) {
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (a == 2 && b == 3) continue;
      auto v = eta.eval(p[a], p[b]);
      if (!v[0].is_zero() || !v[1].is_zero() || !v[2].is_zero()) return false;
    }
  return true;
}

template <Field K>
LineDetection<K> line_detect(const SkewNet<K>& eta, const SubspaceE<K>& e1, const SubspaceE<K>& e2) {
  if (e1 == e2) throw InvalidArgument("line_detect: E1 = E2");
  if (!eta.v_basis) throw InvalidArgument("line_detect: skew net has no V_q basis");
  LineDetection<K> out;
  Matrix<K> common = span_intersection(e1.rows(), e2.rows());
  if (common.rows() != 2) return out;
  LineInX<K> line{e1, e2, {}, {}, {}, {}};
  line.pencil[0] = common.row_vector(0);
  line.pencil[1] = common.row_vector(1);
  line.pencil[2] = complement(common, e1.rows()).row_vector(0);
  line.pencil[3] = complement(common, e2.rows()).row_vector(0);
  const MultiPoly<K> p1 = quadric_of(*eta.v_basis, line.pencil[0]);
  const MultiPoly<K> p2 = quadric_of(*eta.v_basis, line.pencil[1]);
  auto f = common_linear_factor(p1, p2);
  if (!f) {
    out.status = LineStatus::NoCommonFactor;
    return out;
  }
  line.r = f->r;
  line.r1 = f->r1;
  line.r2 = f->r2;
  // pencil members span(p1, p2, alpha p3 + beta p4): isotropy is linear in (alpha, beta)
  for (auto [al, be] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
    Matrix<K> m = Matrix<K>::with_width(7);
    m.append_row(line.pencil[0]);
    m.append_row(line.pencil[1]);
    std::vector<K> mix(7);
    for (std::size_t j = 0; j < 7; ++j) mix[j] = K(al) * line.pencil[2][j] + K(be) * line.pencil[3][j];
    m.append_row(mix);
    if (!isotropic(eta, m)) {
      out.status = LineStatus::NoCommonFactor;
      return out;
    }
  }
  if (!has_line_block_shape(eta, line.pencil)) {
    out.status = LineStatus::NoCommonFactor;
    return out;
  }
  out.status = LineStatus::Line;
  out.line = line;
  return out;
}

/// eta(p3 ^ p4) in N-coordinates.
template <Field K>
Point<K> line_to_point(const SkewNet<K>& eta, const LineInX<K>& line) {
  auto v = eta.eval(line.pencil[2], line.pencil[3]);
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
    throw DegenerateInput("line_to_point", "eta(p3 ^ p4) = 0");
  return Point<K>({v[0], v[1], v[2]});
}

/// The common point of two lines: the member of both pencils, if any.
template <Field K>
std::optional<SubspaceE<K>> line_meeting_point(const LineInX<K>& a, const LineInX<K>& b) {
  auto rows = [](const LineInX<K>& l, std::size_t n) {
    Matrix<K> m = Matrix<K>::with_width(7);
    for (std::size_t i = 0; i < n; ++i) m.append_row(l.pencil[i]);
    return m;
  };
  Matrix<K> s = rows(a, 2);
  for (std::size_t i = 0; i < 2; ++i) s.append_row(b.pencil[i]);
  s = row_basis(s);
  if (s.rows() != 3 || !row_span_contains(rows(a, 4), s) || !row_span_contains(rows(b, 4), s)) return std::nullopt;
  return SubspaceE<K>(s);
}

}  // namespace fano
