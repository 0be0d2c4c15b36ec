#pragma once

#include <array>
#include <vector>

#include "fano/apolar.hpp"
#include "fano/error.hpp"
#include "fano/poly.hpp"
#include "fano/resolve.hpp"

namespace fano {

/// Normalised cubic coordinates: g = a x0^3 + b x1^3 + c x2^3 + 3d x0^2x1 + 3e x0^2x2
/// + 3f x1^2x0 + 3g x1^2x2 + 3h x2^2x0 + 3i x2^2x1 + 6j x0x1x2.
/// T is a scalar or a form (the covariant is built with linear forms here).
template <class T>
struct CubicCoeffs {
  T a, b, c, d, e, f, g, h, i, j;
};

namespace detail {
inline Exponent exp3(int p, int q, int r) {
  return {static_cast<std::uint8_t>(p), static_cast<std::uint8_t>(q), static_cast<std::uint8_t>(r), 0};
}

template <class T, class Coef>
CubicCoeffs<T> cubic_coeffs_from(const Coef& coef) {
  return {coef(exp3(3, 0, 0), 1), coef(exp3(0, 3, 0), 1), coef(exp3(0, 0, 3), 1),
          coef(exp3(2, 1, 0), 3), coef(exp3(2, 0, 1), 3), coef(exp3(1, 2, 0), 3),
          coef(exp3(0, 2, 1), 3), coef(exp3(1, 0, 2), 3), coef(exp3(0, 1, 2), 3),
          coef(exp3(1, 1, 1), 6)};
}
}  // namespace detail

template <Field K>
CubicCoeffs<K> cubic_coeffs(const MultiPoly<K>& g) {
  if (g.degree() != 3 || g.nvars() != 3) throw InvalidArgument("plane cubic expected");
  require_apolarity_safe<K>("cubic coordinates");
  return detail::cubic_coeffs_from<K>(
      [&](const Exponent& e, int m) { return g.coefficient(e) / K(m); });
}

/// I4 as a polynomial expression; `scale(n, x)` multiplies by an integer.
template <class T, class Scale>
T aronhold_formula(const CubicCoeffs<T>& x, const Scale& scale) {
  const T &a = x.a, &b = x.b, &c = x.c, &d = x.d, &e = x.e, &f = x.f, &g = x.g, &h = x.h, &i = x.i, &j = x.j;
  T r = a * b * c * j;
  r = r - (b * c * d * e + c * a * f * g + a * b * h * i);
  r = r - j * (a * g * i + b * h * e + c * d * f);
  r = r + (a * f * i * i + a * h * g * g + b * d * h * h + b * i * e * e + c * g * d * d + c * e * f * f);
  r = r - j * j * j * j;
  r = r + scale(2, j * j * (f * h + i * d + e * g));
  r = r - scale(3, j * (d * g * h + e * f * i));
  r = r - (f * f * h * h + i * i * d * d + e * e * g * g);
  r = r + (i * d * e * g + e * g * f * h + f * h * i * d);
  return r;
}

template <Field K>
K aronhold(const CubicCoeffs<K>& x) {
  return aronhold_formula(x, [](int n, const K& v) { return K(n) * v; });
}

/// Aronhold invariant of a plane cubic; zero exactly on anharmonic cubics.
template <Field K>
K aronhold(const MultiPoly<K>& g) {
  return aronhold(cubic_coeffs(g));
}

enum class CubicPerpKind { CompleteIntersection, NotCompleteIntersection, Cone };

inline const char* to_string(CubicPerpKind k) {
  switch (k) {
    case CubicPerpKind::CompleteIntersection: return "complete_intersection";
    case CubicPerpKind::NotCompleteIntersection: return "not_complete_intersection";
    default: return "cone";
  }
}

/// Whether (g^perp)_2 consists of three quadrics without linear syzygy.
template <Field K>
CubicPerpKind is_complete_intersection_perp(const MultiPoly<K>& g) {
  if (g.degree() != 3 || g.nvars() != 3) throw InvalidArgument("plane cubic expected");
  auto hf = hilbert_function(g);
  if (hf[1] < 3) return CubicPerpKind::Cone;
  Matrix<K> q = perp(g, 2);
  std::vector<MultiPoly<K>> quadrics;
  for (std::size_t r = 0; r < q.rows(); ++r)
    quadrics.push_back(MultiPoly<K>::from_dense(g.ring().dual(), 2, q.row(r)));
  if (quadrics.size() != 3) return CubicPerpKind::NotCompleteIntersection;
  return linear_syzygies(quadrics).rows() == 0 ? CubicPerpKind::CompleteIntersection
                                               : CubicPerpKind::NotCompleteIntersection;
}

/// S_F: the quartic a -> I4(P_a f), in the plane form variables.
/// Throws DegenerateInput when it vanishes identically.
template <Field K>
MultiPoly<K> covariant_quartic(const MultiPoly<K>& f) {
  if (f.degree() != 4 || f.nvars() != 3) throw InvalidArgument("covariant_quartic: plane quartic expected");
  require_apolarity_safe<K>("covariant_quartic");
  // derivative cubics d_k f; P_a f = sum_k a_k d_k f
  std::array<MultiPoly<K>, 3> partial;
  for (int k = 0; k < 3; ++k) partial[static_cast<std::size_t>(k)] = apply(MultiPoly<K>::variable(kPlaneOperators, k), f);
  const RingTag ar = kPlaneForms;
  auto coef = [&](const Exponent& e, int m) {
    MultiPoly<K> lin(ar, 1);
    for (int k = 0; k < 3; ++k) lin.add_term(unit_exponent(k), partial[static_cast<std::size_t>(k)].coefficient(e) / K(m));
    return lin;
  };
  auto cc = detail::cubic_coeffs_from<MultiPoly<K>>(coef);
  MultiPoly<K> s = aronhold_formula(cc, [](int n, const MultiPoly<K>& v) { return K(n) * v; });
  if (s.is_zero()) throw DegenerateInput("covariant_quartic", "S_F vanishes identically");
  return s;
}

/// Determinant of the matrix of second partials.
template <Field K>
MultiPoly<K> hessian(const MultiPoly<K>& f) {
  if (f.nvars() != 3) throw InvalidArgument("hessian: 3 variables expected");
  if (f.degree() < 2) throw InvalidArgument("hessian: degree at least 2 expected");
  PolyMatrix<K> h(3, 3, f.ring());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto op = MultiPoly<K>::variable(f.ring().dual(), i) * MultiPoly<K>::variable(f.ring().dual(), j);
      h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = apply(op, f);
    }
  MultiPoly<K> det = determinant(h);
  if (det.is_zero()) return MultiPoly<K>(f.ring(), 3 * (f.degree() - 2));
  return det;
}

/// Matrix of the quadratic form x -> P_b P_a f, entries linear in b (plane
/// form variables): M_ij = 1/2 sum_l b_l d_i d_j d_l (P_a f).
template <Field K>
PolyMatrix<K> mixed_polar_matrix(const MultiPoly<K>& f, const Point<K>& a) {
  if (f.degree() != 4 || f.nvars() != 3) throw InvalidArgument("mixed_polar_matrix: plane quartic expected");
  require_apolarity_safe<K>("mixed_polar_matrix");
  const MultiPoly<K> cubic = polar(f, a, 1);
  const K half = K(1) / K(2);
  PolyMatrix<K> m(3, 3, kPlaneForms);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MultiPoly<K> entry(kPlaneForms, 1);
      for (int l = 0; l < 3; ++l) {
        const Exponent e = unit_exponent(i) + unit_exponent(j) + unit_exponent(l);
        entry.add_term(unit_exponent(l), half * cubic.coefficient(e) * apolarity_coefficient<K>(e, e));
      }
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry;
    }
  return m;
}

/// The 2x2 minors of a 3x3 matrix of forms.
template <Field K>
std::vector<MultiPoly<K>> two_by_two_minors(const PolyMatrix<K>& m) {
  std::vector<MultiPoly<K>> out;
  for (std::size_t r0 = 0; r0 < m.rows(); ++r0)
    for (std::size_t r1 = r0 + 1; r1 < m.rows(); ++r1)
      for (std::size_t c0 = 0; c0 < m.cols(); ++c0)
        for (std::size_t c1 = c0 + 1; c1 < m.cols(); ++c1) {
          MultiPoly<K> p = minor(m, {r0, r1}, {c0, c1});
          if (!p.is_zero()) out.push_back(p);
        }
  return out;
}

template <Field K>
struct TfFiber {
  PolyMatrix<K> matrix;
  GradedIdeal<K> ideal;
  std::vector<std::size_t> quotient_hf;  // degrees 0..6
  std::size_t colength = 0;              // stable value over degrees 2..6
  bool stable = false;
};

/// Ideal of the 2x2 minors of mixed_polar_matrix(f, a) in the b-variables.
template <Field K>
TfFiber<K> tf_fiber_ideal(const MultiPoly<K>& f, const Point<K>& a) {
  TfFiber<K> out;
  out.matrix = mixed_polar_matrix(f, a);
  out.ideal = GradedIdeal<K>::generated_by(kPlaneForms, two_by_two_minors(out.matrix), 6);
  out.quotient_hf = out.ideal.quotient_hilbert(6);
  out.colength = out.quotient_hf[6];
  out.stable = true;
  for (int d = 2; d <= 6; ++d) {
    if (d >= 4 && out.quotient_hf[static_cast<std::size_t>(d)] != out.colength) out.stable = false;
  }
  return out;
}

/// rank of mixed_polar_matrix(f, a) at b: (a, b) lies on T_F iff rank <= 1.
template <Field K>
std::size_t mixed_polar_rank(const MultiPoly<K>& f, const Point<K>& a, const Point<K>& b) {
  return rank(mixed_polar_matrix(f, a).evaluate(b.coords));
}

}  // namespace fano
