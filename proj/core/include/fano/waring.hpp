#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/apolar.hpp"
#include "fano/error.hpp"
#include "fano/poly.hpp"
#include "fano/resolve.hpp"

namespace fano {

/// rank Cat(f): the Waring-rank lower bound of a plane quartic.
template <Field K>
std::size_t rank_lower(const MultiPoly<K>& f) {
  if (f.is_zero()) throw InvalidArgument("rank_lower of the zero form");
  return rank(catalecticant(f));
}

template <Field K>
MultiPoly<K> power_sum(const std::vector<MultiPoly<K>>& lines, const std::vector<K>& weights, int power = 4) {
  if (lines.size() != weights.size()) throw InvalidArgument("power_sum: lines and weights differ in length");
  if (lines.empty()) throw InvalidArgument("power_sum: no lines");
  MultiPoly<K> f(lines[0].ring(), power);
  for (std::size_t i = 0; i < lines.size(); ++i) f += weights[i] * fano::power(lines[i], power);
  return f;
}

struct TableRow {
  std::vector<std::size_t> hilbert;
  std::vector<int> generators;
};

/// Numerical types of apolar ideals of plane quartics.
inline const std::vector<TableRow>& quartic_table() {
  static const std::vector<TableRow> rows = {
      {{1, 3, 6, 3, 1}, {3, 3, 3, 3, 3, 3, 3}}, {{1, 3, 5, 3, 1}, {2, 3, 3, 3, 3}},
      {{1, 3, 4, 3, 1}, {2, 2, 3}},             {{1, 3, 4, 3, 1}, {2, 2, 3, 3, 4}},
      {{1, 3, 3, 3, 1}, {2, 2, 2, 4, 4}},       {{1, 2, 3, 2, 1}, {1, 3, 3}},
      {{1, 2, 2, 2, 1}, {1, 2, 4}},             {{1, 1, 1, 1, 1}, {1, 1, 5}},
  };
  return rows;
}

struct Classification {
  std::vector<std::size_t> hilbert;
  std::vector<int> generators;
  int row = -1;  // index into quartic_table(), -1 when unlisted
  bool listed() const { return row >= 0; }
};

template <Field K>
Classification classify(const MultiPoly<K>& f, int cap = kDefaultCap) {
  if (f.is_zero()) throw InvalidArgument("classify of the zero form");
  if (f.degree() != 4 || f.nvars() != 3) throw InvalidArgument("classify: plane quartic expected");
  Classification c;
  c.hilbert = hilbert_function(f);
  Resolution<K> res = min_res(perp_ideal(f, cap), cap);
  c.generators = res.generator_degrees();
  const auto& table = quartic_table();
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i].hilbert == c.hilbert && table[i].generators == c.generators) c.row = static_cast<int>(i);
  return c;
}

enum class WeightStatus { Unique, NotInSpan, Underdetermined };

inline const char* to_string(WeightStatus s) {
  switch (s) {
    case WeightStatus::Unique: return "unique";
    case WeightStatus::NotInSpan: return "not_in_span";
    default: return "underdetermined";
  }
}

template <Field K>
struct WeightSolution {
  WeightStatus status = WeightStatus::NotInSpan;
  std::vector<K> weights;        // a particular solution when one exists
  std::size_t nullity = 0;       // dimension of the solution space
};

/// Solves f = sum lambda_i l_i^deg f exactly.
template <Field K>
WeightSolution<K> solve_weights(const MultiPoly<K>& f, const std::vector<MultiPoly<K>>& lines) {
  if (lines.empty()) throw InvalidArgument("solve_weights: no lines");
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (proportionality(lines[i], lines[j])) throw InvalidArgument("solve_weights: proportional lines");
  const std::size_t dim = ring_dimension(f.nvars(), f.degree());
  Matrix<K> a(dim, lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto v = fano::power(lines[i], f.degree()).to_dense();
    for (std::size_t r = 0; r < dim; ++r) a(r, i) = v[r];
  }
  WeightSolution<K> out;
  auto x = solve(a, f.to_dense());
  if (!x) return out;
  out.weights = *x;
  out.nullity = lines.size() - rank(a);
  out.status = out.nullity == 0 ? WeightStatus::Unique : WeightStatus::Underdetermined;
  return out;
}

/// True iff every stored piece of I lies in f^perp.
template <Field K>
bool is_apolar(const GradedIdeal<K>& I, const MultiPoly<K>& f) {
  if (I.ring() != f.ring().dual()) throw InvalidArgument("is_apolar: ideal is not in the operator ring of f");
  for (const auto& [d, m] : I.pieces())
    if (m.rows() && !row_span_contains(perp(f, d), m)) return false;
  return true;
}

/// Ideal in the operator ring of the points whose coordinates are the
/// coefficient vectors of `lines`.
template <Field K>
GradedIdeal<K> points_ideal(const std::vector<MultiPoly<K>>& lines, int cap) {
  if (lines.empty()) throw InvalidArgument("points_ideal: no points");
  const RingTag ring = lines[0].ring().dual();
  GradedIdeal<K> I(ring, cap);
  for (int d = 0; d <= cap; ++d) {
    const auto& mons = monomial_basis(ring.nvars, d);
    Matrix<K> ev(mons.size(), lines.size());
    for (std::size_t p = 0; p < lines.size(); ++p) {
      auto pt = lines[p].to_dense();
      for (std::size_t m = 0; m < mons.size(); ++m) {
        K v(1);
        for (int k = 0; k < ring.nvars; ++k)
          for (int t = 0; t < mons[m][static_cast<std::size_t>(k)]; ++t) v *= pt[static_cast<std::size_t>(k)];
        ev(m, p) = v;
      }
    }
    I.set_piece(d, left_kernel(ev));
  }
  return I;
}

template <Field K>
struct HexagonIdeal {
  PolyMatrix<K> psi;                    // 4x3, linear forms
  std::vector<MultiPoly<K>> generators;  // the 4 maximal minors
  GradedIdeal<K> ideal;
  std::vector<std::size_t> quotient_hf;  // degrees 0..5
};

/// Maximal minors of a 4x3 linear matrix; valid when the quotient has
/// Hilbert function (1,3,6,6,6,6).
template <Field K>
HexagonIdeal<K> hexagon_from_block(const PolyMatrix<K>& psi) {
  if (psi.rows() != 4 || psi.cols() != 3) throw InvalidArgument("hexagon_from_block: 4x3 matrix expected");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!psi(i, j).is_zero() && psi(i, j).degree() != 1)
        throw InvalidArgument("hexagon_from_block: entries must be linear");
  HexagonIdeal<K> h;
  h.psi = psi;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < 4; ++r)
      if (r != skip) rows.push_back(r);
    MultiPoly<K> m = minor(psi, rows, {0, 1, 2});
    if (m.is_zero()) m = MultiPoly<K>(psi.ring(), 3);
    h.generators.push_back(m);
  }
  h.ideal = GradedIdeal<K>::generated_by(psi.ring(), h.generators, 5);
  h.quotient_hf = h.ideal.quotient_hilbert(5);
  const std::vector<std::size_t> want = {1, 3, 6, 6, 6, 6};
  if (h.quotient_hf != want) {
    std::string got;
    for (auto v : h.quotient_hf) got += (got.empty() ? "" : ",") + std::to_string(v);
    throw DegenerateInput("hexagon_from_block", "minors do not define a length-6 scheme, quotient HF (" + got + ")");
  }
  return h;
}

/// (1 - 1/t^2) x1^4 + x1^3 (x0 - 4/t x2) + 1/t^2 (x1 + t x2)^4 + x2^3 (x0 - 4t x1) + (1 - t^2) x2^4
template <Field K>
MultiPoly<K> remark_family(const K& t) {
  if (t.is_zero()) throw InvalidArgument("remark_family: t must be nonzero");
  using P = MultiPoly<K>;
  const P x0 = P::variable(kPlaneForms, 0), x1 = P::variable(kPlaneForms, 1), x2 = P::variable(kPlaneForms, 2);
  const K it = t.inverse();
  const K it2 = it * it;
  P f = (K(1) - it2) * fano::power(x1, 4);
  f += fano::power(x1, 3) * (x0 - (K(4) * it) * x2);
  f += it2 * fano::power(x1 + t * x2, 4);
  f += fano::power(x2, 3) * (x0 - (K(4) * t) * x1);
  f += (K(1) - t * t) * fano::power(x2, 4);
  return f;
}

/// Symmetric matrix of a quadric: Q = x^T M x.
template <Field K>
Matrix<K> quadric_matrix(const MultiPoly<K>& q) {
  if (q.degree() != 2) throw InvalidArgument("quadric_matrix: quadric expected");
  const std::size_t n = static_cast<std::size_t>(q.nvars());
  Matrix<K> m(n, n);
  const K half = K(1) / K(2);
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      for (int t = 0; t < e[k]; ++t) idx.push_back(k);
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) += c;
    } else {
      m(idx[0], idx[1]) += half * c;
      m(idx[1], idx[0]) += half * c;
    }
  }
  return m;
}

/// If q = c * l^2 exactly, returns (c, l).
template <Field K>
std::optional<std::pair<K, MultiPoly<K>>> square_root_up_to_scalar(const MultiPoly<K>& q) {
  if (q.is_zero()) return std::nullopt;
  Matrix<K> m = quadric_matrix(q);
  if (rank(m) != 1) return std::nullopt;
  std::size_t i = 0;
  while (m(i, i).is_zero()) ++i;
  MultiPoly<K> l = MultiPoly<K>::linear_form(q.ring(), m.row_vector(i));
  const K c = m(i, i).inverse();
  if (!(c * l * l == q)) return std::nullopt;
  return std::make_pair(c, l);
}

}  // namespace fano
