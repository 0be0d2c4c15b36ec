#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <thread>
#include <vector>

#include "fano/error.hpp"
#include "fano/field.hpp"
#include "fano/matrix.hpp"
#include "fano/netquad.hpp"
#include "fano/poly.hpp"
#include "fano/skewfano.hpp"

namespace fano {

template <Field L>
SkewNet<L> reduce_mod(const SkewNet<Rational>& eta) {
  std::array<Matrix<L>, 3> f;
  for (std::size_t k = 0; k < 3; ++k) {
    try {
      f[k] = reduce_matrix<L>(eta.forms[k]);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("eta_" + std::to_string(k) + " " + e.what());
    }
  }
  SkewNet<L> out(f);
  if (eta.v_basis) out.v_basis = reduce_matrix<L>(*eta.v_basis);
  if (eta.n_to_udual) out.n_to_udual = reduce_matrix<L>(*eta.n_to_udual);
  return out;
}

template <Field L>
NetOfQuadrics<L> reduce_mod(const NetOfQuadrics<Rational>& q) {
  std::array<Matrix<L>, 3> m;
  for (std::size_t i = 0; i < 3; ++i) {
    try {
      m[i] = reduce_matrix<L>(q.matrix(i));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("M_" + std::to_string(i) + " " + e.what());
    }
  }
  return NetOfQuadrics<L>(m);
}

template <Field L>
MultiPoly<L> reduce_mod(const MultiPoly<Rational>& f) {
  return reduce_poly<L>(f);
}

/// Scales all three forms by one rational so that the entries become coprime
/// integers. The isotropic subspaces do not change.
inline SkewNet<Rational> primitive_integral(const SkewNet<Rational>& eta) {
  mpz_class l = 1, g = 0;
  for (const auto& m : eta.forms)
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) l = lcm(l, m(i, j).denominator());
  for (const auto& m : eta.forms)
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) g = gcd(g, m(i, j).numerator() * (l / m(i, j).denominator()));
  if (g == 0) return eta;
  const Rational s(l, g);
  SkewNet<Rational> out({s * eta.forms[0], s * eta.forms[1], s * eta.forms[2]});
  out.v_basis = eta.v_basis;
  out.n_to_udual = eta.n_to_udual;
  return out;
}

namespace detail {

template <Field K>
using Vec7 = std::array<K, 7>;

/// In-place RREF of up to 7 rows of length 7; returns the rank.
template <Field K>
std::size_t rref7(std::vector<Vec7<K>>& rows, std::array<std::size_t, 7>& piv) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < 7 && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    const K inv = rows[r][c].inverse();
    for (std::size_t j = c; j < 7; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const K f = rows[i][c];
      for (std::size_t j = c; j < 7; ++j) rows[i][j] -= f * rows[r][j];
    }
    piv[r++] = c;
  }
  rows.resize(r);
  return r;
}

template <Field K>
std::vector<Vec7<K>> kernel7(std::vector<Vec7<K>> rows) {
  std::array<std::size_t, 7> piv{};
  const std::size_t rk = rref7(rows, piv);
  std::array<bool, 7> is_piv{};
  for (std::size_t i = 0; i < rk; ++i) is_piv[piv[i]] = true;
  std::vector<Vec7<K>> out;
  for (std::size_t f = 0; f < 7; ++f) {
    if (is_piv[f]) continue;
    Vec7<K> v{};
    v[f] = K(1);
    for (std::size_t i = 0; i < rk; ++i) v[piv[i]] = -rows[i][f];
    out.push_back(v);
  }
  return out;
}

template <Field K>
K form_value(const Matrix<K>& m, const Vec7<K>& u, const Vec7<K>& v) {
  K acc(0);
  for (std::size_t i = 0; i < 7; ++i) {
    if (u[i].is_zero()) continue;
    K row(0);
    for (std::size_t j = 0; j < 7; ++j) row += m(i, j) * v[j];
    acc += u[i] * row;
  }
  return acc;
}

/// All projective points of F_p^n as normalised vectors (first nonzero entry 1).
template <Field K>
std::vector<std::vector<K>> projective_points(std::size_t n) {
  constexpr std::uint32_t p = characteristic_v<K>;
  std::vector<std::vector<K>> out;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t free = n - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<K> v(n);
      v[lead] = K(1);
      std::uint64_t t = idx;
      for (std::size_t i = n; i-- > lead + 1;) {
        v[i] = K(static_cast<long>(t % p));
        t /= p;
      }
      out.push_back(v);
    }
  }
  return out;
}

/// All 2-dimensional subspaces of F_p^m as pairs of RREF rows.
template <Field K>
std::vector<std::pair<std::vector<K>, std::vector<K>>> two_planes(std::size_t m) {
  constexpr std::uint32_t p = characteristic_v<K>;
  std::vector<std::pair<std::vector<K>, std::vector<K>>> out;
  for (std::size_t c0 = 0; c0 < m; ++c0)
    for (std::size_t c1 = c0 + 1; c1 < m; ++c1) {
      std::vector<std::pair<std::size_t, std::size_t>> slots;  // (row, col)
      for (std::size_t j = c0 + 1; j < m; ++j)
        if (j != c1) slots.emplace_back(0, j);
      for (std::size_t j = c1 + 1; j < m; ++j) slots.emplace_back(1, j);
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < slots.size(); ++i) total *= p;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<K> a(m), b(m);
        a[c0] = K(1);
        b[c1] = K(1);
        std::uint64_t t = idx;
        for (const auto& [r, c] : slots) {
          (r == 0 ? a : b)[c] = K(static_cast<long>(t % p));
          t /= p;
        }
        out.emplace_back(a, b);
      }
    }
  return out;
}

template <std::uint32_t P>
constexpr std::uint64_t ipow(std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= P;
  return r;
}

/// The normalised p1 with linear index `idx` (blocks by leading position).
template <Field K>
Vec7<K> nth_point(std::uint64_t idx) {
  constexpr std::uint32_t p = characteristic_v<K>;
  for (std::size_t lead = 0; lead < 7; ++lead) {
    std::uint64_t block = 1;
    for (std::size_t i = 0; i < 6 - lead; ++i) block *= p;
    if (idx < block) {
      Vec7<K> v{};
      v[lead] = K(1);
      for (std::size_t i = 7; i-- > lead + 1;) {
        v[i] = K(static_cast<long>(idx % p));
        idx /= p;
      }
      return v;
    }
    idx -= block;
  }
  throw InvalidArgument("nth_point: index out of range");
}

/// Isotropic E through p1 whose canonical first row is p1.
template <Field K>
void points_through(const SkewNet<K>& eta, const Vec7<K>& p1, std::vector<Matrix<K>>& out) {
  std::vector<Vec7<K>> a(3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < 7; ++j) {
      K acc(0);
      for (std::size_t i = 0; i < 7; ++i) acc += p1[i] * eta.forms[k](i, j);
      a[k][j] = acc;
    }
  std::vector<Vec7<K>> ker = kernel7(a);
  std::size_t lead = 0;
  while (p1[lead].is_zero()) ++lead;
  for (auto& v : ker) {
    const K c = v[lead];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < 7; ++j) v[j] -= c * p1[j];
  }
  std::array<std::size_t, 7> piv{};
  rref7(ker, piv);
  const std::size_t m = ker.size();
  if (m < 2) return;
  // restricted forms on the complement basis
  std::array<Matrix<K>, 3> w{Matrix<K>(m, m), Matrix<K>(m, m), Matrix<K>(m, m)};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = x + 1; y < m; ++y) {
        const K v = form_value(eta.forms[k], ker[x], ker[y]);
        w[k](x, y) = v;
        w[k](y, x) = -v;
      }
  auto emit = [&](const std::vector<K>& u, const std::vector<K>& v) {
    std::vector<Vec7<K>> rows(3);
    rows[0] = p1;
    for (std::size_t j = 0; j < 7; ++j) {
      K su(0), sv(0);
      for (std::size_t x = 0; x < m; ++x) {
        su += u[x] * ker[x][j];
        sv += v[x] * ker[x][j];
      }
      rows[1][j] = su;
      rows[2][j] = sv;
    }
    std::array<std::size_t, 7> pv{};
    if (rref7(rows, pv) != 3) return;
    if (rows[0] != p1) return;
    Matrix<K> e(3, 7);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 7; ++j) e(i, j) = rows[i][j];
    out.push_back(std::move(e));
  };
  if (m == 2) {
    if (w[0](0, 1).is_zero() && w[1](0, 1).is_zero() && w[2](0, 1).is_zero())
      emit({K(1), K(0)}, {K(0), K(1)});
    return;
  }
  if (m == 3) {
    // Pluecker coordinates (P01, P02, P12) of the 2-plane; normal (P12, -P02, P01)
    Matrix<K> c(3, 3);
    for (std::size_t k = 0; k < 3; ++k) {
      c(k, 0) = w[k](0, 1);
      c(k, 1) = w[k](0, 2);
      c(k, 2) = w[k](1, 2);
    }
    Matrix<K> sol = kernel(c);
    if (sol.rows() == 0) return;
    std::vector<std::vector<K>> candidates;
    if (sol.rows() == 1) {
      candidates.push_back(sol.row_vector(0));
    } else {
      for (const auto& coeff : projective_points<K>(sol.rows())) {
        std::vector<K> pl(3);
        for (std::size_t r = 0; r < sol.rows(); ++r)
          for (std::size_t j = 0; j < 3; ++j) pl[j] += coeff[r] * sol(r, j);
        candidates.push_back(pl);
      }
    }
    for (const auto& pl : candidates) {
      Matrix<K> normal{{pl[2], -pl[1], pl[0]}};
      Matrix<K> plane = kernel(normal);
      emit(plane.row_vector(0), plane.row_vector(1));
    }
    return;
  }
  for (const auto& [u, v] : two_planes<K>(m)) {
    bool ok = true;
    for (std::size_t k = 0; k < 3 && ok; ++k) {
      K acc(0);
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) acc += u[x] * w[k](x, y) * v[y];
      ok = acc.is_zero();
    }
    if (ok) emit(u, v);
  }
}

}  // namespace detail

template <Field K>
std::uint64_t projective_count(std::size_t n) {
  std::uint64_t total = 0, block = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += block;
    block *= characteristic_v<K>;
  }
  return total;
}

/// All isotropic 3-planes of eta over F_p, sorted canonically. Work is split
/// over the first basis vector p1 across `threads` workers.
template <Field K>
std::vector<SubspaceE<K>> enumerate_points(const SkewNet<K>& eta, unsigned threads = 0) {
  static_assert(characteristic_v<K> > 0, "enumerate_points works over prime fields");
  if (eta.is_zero() && characteristic_v<K> > 2)
    throw InvalidArgument("enumerate_points: zero skew net over F_p with p > 2 is rejected");
  const std::uint64_t total = projective_count<K>(7);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<std::vector<Matrix<K>>> found(threads);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
      for (std::uint64_t i = lo; i < hi; ++i) detail::points_through(eta, detail::nth_point<K>(i), found[t]);
    });
  }
  for (auto& th : pool) th.join();
  std::vector<Matrix<K>> all;
  for (auto& f : found)
    for (auto& m : f) all.push_back(std::move(m));
  std::sort(all.begin(), all.end(), canonical_less<K>);
  std::vector<SubspaceE<K>> out;
  out.reserve(all.size());
  for (auto& m : all) out.push_back(SubspaceE<K>::from_canonical(std::move(m)));
  return out;
}

template <Field K>
struct BruteResult {
  std::vector<SubspaceE<K>> points;
  std::uint64_t visited = 0;  // canonical 3x7 forms enumerated
};

/// Oracle: every RREF 3x7 matrix over F_2 or F_3, filtered by isotropy.
template <Field K>
BruteResult<K> brute_points(const SkewNet<K>& eta) {
  constexpr std::uint32_t p = characteristic_v<K>;
  if (p != 2 && p != 3) throw InvalidArgument("brute_points: only p = 2 or 3");
  BruteResult<K> out;
  std::vector<Matrix<K>> found;
  for (std::size_t c0 = 0; c0 < 7; ++c0)
    for (std::size_t c1 = c0 + 1; c1 < 7; ++c1)
      for (std::size_t c2 = c1 + 1; c2 < 7; ++c2) {
        const std::array<std::size_t, 3> piv{c0, c1, c2};
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t j = piv[r] + 1; j < 7; ++j)
            if (j != c0 && j != c1 && j != c2) slots.emplace_back(r, j);
        const std::uint64_t count = detail::ipow<p>(slots.size());
        for (std::uint64_t idx = 0; idx < count; ++idx) {
          Matrix<K> e(3, 7);
          for (std::size_t r = 0; r < 3; ++r) e(r, piv[r]) = K(1);
          std::uint64_t t = idx;
          for (const auto& [r, c] : slots) {
            e(r, c) = K(static_cast<long>(t % p));
            t /= p;
          }
          ++out.visited;
          if (isotropic(eta, e)) found.push_back(std::move(e));
        }
      }
  std::sort(found.begin(), found.end(), canonical_less<K>);
  for (auto& m : found) out.points.push_back(SubspaceE<K>::from_canonical(std::move(m)));
  return out;
}

template <Field K>
struct LineSample {
  std::vector<LineInX<K>> lines;
  std::uint64_t pairs_tested = 0;
  std::uint64_t anomalies = 0;  // intersecting pairs without a common factor
  bool truncated = false;       // the pair budget ran out
};

/// Tests pairs of points (in an order fixed by `seed`) for a common line,
/// stopping after `budget` pairs. Lines are deduplicated by their pencil span.
template <Field K>
LineSample<K> sample_lines(const SkewNet<K>& eta, const std::vector<SubspaceE<K>>& points, std::uint64_t budget,
                           std::uint64_t seed = 0) {
  LineSample<K> out;
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::vector<Matrix<K>> seen;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (out.pairs_tested >= budget) {
        out.truncated = true;
        return out;
      }
      ++out.pairs_tested;
      const auto& e1 = points[order[a]];
      const auto& e2 = points[order[b]];
      Matrix<K> both = e1.rows();
      both.append_rows(e2.rows());
      if (rank(both) != 4) continue;
      auto det = line_detect(eta, e1, e2);
      if (det.status == LineStatus::NoCommonFactor) ++out.anomalies;
      if (!det.line) continue;
      Matrix<K> span = Matrix<K>::with_width(7);
      for (const auto& p : det.line->pencil) span.append_row(p);
      span = row_basis(span);
      if (std::find(seen.begin(), seen.end(), span) != seen.end()) continue;
      seen.push_back(span);
      out.lines.push_back(*det.line);
    }
  return out;
}

template <Field K>
struct CensusReport {
  std::uint32_t p = characteristic_v<K>;
  std::uint64_t seed = 0;
  std::vector<SubspaceE<K>> points;
  LineSample<K> lines;
  double seconds = 0;
};

template <Field K>
CensusReport<K> census(const SkewNet<K>& eta, std::uint64_t budget, std::uint64_t seed = 0, unsigned threads = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  CensusReport<K> r;
  r.seed = seed;
  r.points = enumerate_points(eta, threads);
  if (eta.v_basis) r.lines = sample_lines(eta, r.points, budget, seed);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace fano
