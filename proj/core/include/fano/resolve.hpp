#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fano/apolar.hpp"
#include "fano/error.hpp"
#include "fano/matrix.hpp"
#include "fano/pfaffian.hpp"
#include "fano/poly.hpp"

namespace fano {

/// Graded free module R(-a_0) + ... + R(-a_m). A degree-d element is the
/// concatenation of its components' coefficient vectors in R_{d - a_j}.
class GradedFree {
 public:
  GradedFree() = default;
  GradedFree(int nvars, std::vector<int> degrees) : nvars_(nvars), degrees_(std::move(degrees)) {}

  int nvars() const { return nvars_; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }

  std::size_t dim(int d) const {
    std::size_t n = 0;
    for (int a : degrees_) n += ring_dimension(nvars_, d - a);
    return n;
  }
  std::size_t offset(int d, std::size_t j) const {
    std::size_t n = 0;
    for (std::size_t k = 0; k < j; ++k) n += ring_dimension(nvars_, d - degrees_[k]);
    return n;
  }

 private:
  int nvars_ = 3;
  std::vector<int> degrees_;
};

/// Rows x_k * v for all variables and all rows v (degree d elements of F).
template <Field K>
Matrix<K> module_times_linear(const Matrix<K>& rows, const GradedFree& F, int d) {
  const int n = F.nvars();
  Matrix<K> out(rows.rows() * static_cast<std::size_t>(n), F.dim(d + 1));
  for (std::size_t j = 0; j < F.rank(); ++j) {
    const int e = d - F.degrees()[j];
    if (e < 0) continue;
    const auto& src = monomial_basis(n, e);
    const auto& dst = monomial_basis(n, e + 1);
    const std::size_t so = F.offset(d, j), dof = F.offset(d + 1, j);
    for (int k = 0; k < n; ++k) {
      const Exponent u = unit_exponent(k);
      for (std::size_t r = 0; r < rows.rows(); ++r)
        for (std::size_t i = 0; i < src.size(); ++i)
          if (!rows(r, so + i).is_zero())
            out(static_cast<std::size_t>(k) * rows.rows() + r, dof + dst.index_of(src[i] + u)) = rows(r, so + i);
    }
  }
  return out;
}

/// Scalar matrix of the map F -> G in degree d, rows indexed by the basis of
/// F_d. Row j of `map` is the image of the j-th generator of F.
template <Field K>
Matrix<K> degree_matrix(const PolyMatrix<K>& map, const GradedFree& F, const GradedFree& G, int d) {
  const int n = F.nvars();
  Matrix<K> out(F.dim(d), G.dim(d));
  for (std::size_t j = 0; j < F.rank(); ++j) {
    const int e = d - F.degrees()[j];
    if (e < 0) continue;
    const auto& mons = monomial_basis(n, e);
    const std::size_t row0 = F.offset(d, j);
    for (std::size_t k = 0; k < G.rank(); ++k) {
      const auto& entry = map(j, k);
      if (entry.is_zero()) continue;
      const auto& dst = monomial_basis(n, d - G.degrees()[k]);
      const std::size_t col0 = G.offset(d, k);
      for (std::size_t m = 0; m < mons.size(); ++m)
        for (const auto& [ex, c] : entry.terms()) out(row0 + m, col0 + dst.index_of(mons[m] + ex)) += c;
    }
  }
  return out;
}

/// Splits a degree-d element of G into its component forms.
template <Field K>
std::vector<MultiPoly<K>> element_components(std::span<const K> v, const GradedFree& G, int d, RingTag ring) {
  std::vector<MultiPoly<K>> out;
  for (std::size_t k = 0; k < G.rank(); ++k) {
    const int e = d - G.degrees()[k];
    if (e < 0) {
      out.emplace_back(ring, 0);
      continue;
    }
    const std::size_t len = ring_dimension(G.nvars(), e);
    out.push_back(MultiPoly<K>::from_dense(ring, e, v.subspan(G.offset(d, k), len)));
  }
  return out;
}

/// Graded Betti numbers: (homological degree, internal degree) -> rank.
struct BettiTable {
  std::map<std::pair<int, int>, std::size_t> entries;

  std::size_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  std::vector<std::tuple<int, int, std::size_t>> triples() const {
    std::vector<std::tuple<int, int, std::size_t>> out;
    for (const auto& [k, v] : entries) out.emplace_back(k.first, k.second, v);
    return out;
  }
  std::string str() const {
    std::string s;
    for (const auto& [k, v] : entries) {
      if (!s.empty()) s += ' ';
      s += "(" + std::to_string(k.first) + "," + std::to_string(k.second) + "," + std::to_string(v) + ")";
    }
    return s;
  }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Minimal graded free resolution 0 <- R/I <- F_0 <- F_1 <- ... computed
/// degree by degree. maps[i] : F_{i+1} -> F_i, one row per generator of F_{i+1}.
template <Field K>
struct Resolution {
  RingTag ring{};
  int cap = kDefaultCap;
  bool truncated = false;
  int top_degree = 0;  // last degree with nonzero quotient
  std::vector<GradedFree> modules;
  std::vector<PolyMatrix<K>> maps;
  std::vector<std::size_t> quotient_hf;

  std::size_t length() const { return modules.empty() ? 0 : modules.size() - 1; }

  BettiTable betti() const {
    BettiTable t;
    for (std::size_t i = 0; i < modules.size(); ++i)
      for (int a : modules[i].degrees()) ++t.entries[{static_cast<int>(i), a}];
    return t;
  }

  /// Generator degrees of F_1 (the minimal generators of I).
  std::vector<int> generator_degrees() const {
    return modules.size() > 1 ? modules[1].degrees() : std::vector<int>{};
  }

  /// Scalar matrix of maps[i] in internal degree d.
  Matrix<K> map_in_degree(std::size_t i, int d) const {
    return degree_matrix(maps[i], modules[i + 1], modules[i], d);
  }
};

/// Minimal free resolution of R/I through internal degree `cap`. The result is
/// marked truncated when the cap does not reach the regularity bound
/// (top degree of R/I plus the number of variables) or R/I is not Artinian
/// within the stored pieces of I.
template <Field K>
Resolution<K> min_res(const GradedIdeal<K>& I, int cap = kDefaultCap) {
  const int n = I.ring().nvars;
  Resolution<K> res;
  res.ring = I.ring();
  res.cap = cap;

  int s = -1;
  bool artinian = false;
  for (int d = 0; d <= I.cap(); ++d) {
    if (!I.has_piece(d)) break;
    if (I.quotient_dim(d) == 0) {
      artinian = true;
      break;
    }
    s = d;
  }
  if (s < 0) s = 0;
  if (!artinian) {
    res.truncated = true;
    s = std::max(s, I.cap());
  }
  res.top_degree = s;
  if (cap < s + n) res.truncated = true;
  for (int d = 0; d <= std::min(cap, I.cap()); ++d) res.quotient_hf.push_back(I.quotient_dim(d));

  res.modules.emplace_back(n, std::vector<int>{0});
  std::map<int, Matrix<K>> kernels;
  for (int d = 0; d <= std::min({cap, s + 1, I.cap()}); ++d) kernels[d] = I.piece(d);

  for (int k = 0; k <= n; ++k) {
    const GradedFree F = res.modules.back();
    std::vector<int> gen_degrees;
    std::vector<std::vector<K>> gen_vectors;
    const int limit = std::min(cap, s + k + 1);
    for (int d = 0; d <= limit; ++d) {
      auto it = kernels.find(d);
      if (it == kernels.end() || it->second.rows() == 0) continue;
      Matrix<K> prev = Matrix<K>::with_width(F.dim(d));
      auto pit = kernels.find(d - 1);
      if (pit != kernels.end() && pit->second.rows() > 0) prev = module_times_linear(pit->second, F, d - 1);
      Matrix<K> fresh = complement(prev, it->second);
      for (std::size_t r = 0; r < fresh.rows(); ++r) {
        gen_degrees.push_back(d);
        gen_vectors.push_back(fresh.row_vector(r));
      }
    }
    if (gen_degrees.empty()) break;

    GradedFree G(n, gen_degrees);
    PolyMatrix<K> phi(gen_degrees.size(), F.rank(), I.ring());
    for (std::size_t g = 0; g < gen_vectors.size(); ++g) {
      auto comps = element_components<K>(gen_vectors[g], F, gen_degrees[g], I.ring());
      for (std::size_t c = 0; c < comps.size(); ++c) phi(g, c) = comps[c];
    }
    res.modules.push_back(G);
    res.maps.push_back(phi);

    kernels.clear();
    for (int d = 0; d <= std::min(cap, s + k + 2); ++d) {
      if (G.dim(d) == 0) continue;
      Matrix<K> m = degree_matrix(phi, G, F, d);
      kernels[d] = left_kernel(m);
    }
  }
  return res;
}

/// Linear syzygies of forms g_1..g_m of one degree e: rows are (l_1,...,l_m)
/// with sum l_i g_i = 0, each l_i linear, in the block layout of GradedFree.
template <Field K>
Matrix<K> linear_syzygies(const std::vector<MultiPoly<K>>& gens) {
  if (gens.empty()) throw InvalidArgument("linear_syzygies: no forms");
  const RingTag ring = gens[0].ring();
  const int e = gens[0].degree();
  PolyMatrix<K> phi(gens.size(), 1, ring);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != e || gens[i].ring() != ring) throw InvalidArgument("linear_syzygies: mixed forms");
    phi(i, 0) = gens[i];
  }
  GradedFree F(ring.nvars, std::vector<int>(gens.size(), e));
  GradedFree G(ring.nvars, {0});
  return left_kernel(degree_matrix(phi, F, G, e + 1));
}

/// Duality data of a resolution with the shape
/// 1 <- 7R(-2) <- 8R(-3)+3R(-4) <- 8R(-5) <- 3R(-6).
template <Field K>
struct DualityData {
  Matrix<K> sigma;  // 8x8, skew
  Matrix<K> tau;    // 3x3, invertible
  PolyMatrix<K> psi1;  // 3x8
  PolyMatrix<K> psi2;  // 8x3
};

template <Field K>
bool has_net_shape(const Resolution<K>& res) {
  BettiTable want;
  want.entries = {{{0, 0}, 1}, {{1, 2}, 7}, {{2, 3}, 8}, {{2, 4}, 3}, {{3, 5}, 8}, {{4, 6}, 3}};
  return !res.truncated && res.betti() == want;
}

/// psi1 (3x8) and psi2 (8x3) in column convention, read off the resolution.
template <Field K>
std::pair<PolyMatrix<K>, PolyMatrix<K>> net_tail_maps(const Resolution<K>& res) {
  if (!has_net_shape(res)) throw DegenerateInput("tor_duality", "resolution does not have the net shape");
  const PolyMatrix<K>& phi3 = res.maps[2];  // 8 x 11
  PolyMatrix<K> psi1(3, 8, res.ring);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 8; ++j) psi1(i, j) = phi3(j, 8 + i);
  return {psi1, res.maps[3].transpose()};
}

/// Solves rho * psi2 = psi1^T * tau linearly in (rho, tau); a one-dimensional
/// solution space gives sigma = rho^{-1} with psi2 = sigma psi1^T tau.
template <Field K>
DualityData<K> tor_duality(const Resolution<K>& res) {
  auto [psi1, psi2] = net_tail_maps(res);
  const PolyMatrix<K> psi1t = psi1.transpose();  // 8 x 3
  const int nv = res.ring.nvars;
  const std::size_t nrho = 64, ntau = 9;
  Matrix<K> eqs(8 * 3 * static_cast<std::size_t>(nv), nrho + ntau);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (int v = 0; v < nv; ++v) {
        const std::size_t row = (i * 3 + j) * static_cast<std::size_t>(nv) + static_cast<std::size_t>(v);
        const Exponent u = unit_exponent(v);
        for (std::size_t k = 0; k < 8; ++k) eqs(row, i * 8 + k) += psi2(k, j).coefficient(u);
        for (std::size_t k = 0; k < 3; ++k) eqs(row, nrho + k * 3 + j) -= psi1t(i, k).coefficient(u);
      }
  Matrix<K> sol = kernel(eqs);
  if (sol.rows() != 1)
    throw DegenerateInput("tor_duality", "solution space has dimension " + std::to_string(sol.rows()) +
                                             ", expected 1 (non-general net)");
  Matrix<K> rho(8, 8), tau(3, 3);
  for (std::size_t i = 0; i < 64; ++i) rho(i / 8, i % 8) = sol(0, i);
  for (std::size_t i = 0; i < 9; ++i) tau(i / 3, i % 3) = sol(0, nrho + i);
  auto sigma = inverse(rho);
  if (!sigma) throw DegenerateInput("tor_duality", "rho is singular");
  if (!inverse(tau)) throw DegenerateInput("tor_duality", "tau is singular");
  if (!sigma->is_skew()) throw DegenerateInput("tor_duality", "sigma is not skew-symmetric");
  DualityData<K> out{*sigma, tau, psi1, psi2};
  PolyMatrix<K> rebuilt = scale_right(scale_left(out.sigma, psi1t), out.tau);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!(rebuilt(i, j) - psi2(i, j)).is_zero())
        throw DegenerateInput("tor_duality", "psi2 != sigma psi1^T tau");
  return out;
}

/// Result of the Ext^4 computation: `pairing` (3x3) pairs the classes in
/// A_2 dual to the three quadrics (rows) with the Tor_4 generators (columns).
template <Field K>
struct Ext4Data {
  std::size_t coker_dim_minus4 = 0;
  std::size_t coker_dim_minus6 = 0;
  Matrix<K> pairing;
};

/// Presentation 3R(6) <- 8R(5) of Ext^4(A^q, R). `dual_classes` holds three
/// quadrics D_i of R_2 lifting the basis of A_2 dual to the net's quadrics.
template <Field K>
Ext4Data<K> ext4_identification(const Resolution<K>& res, const std::vector<MultiPoly<K>>& dual_classes,
                                const Matrix<K>& v_basis) {
  if (!has_net_shape(res)) throw DegenerateInput("ext4_identification", "resolution does not have the net shape");
  const PolyMatrix<K>& phi4 = res.maps[3];  // 3 x 8
  const int nv = res.ring.nvars;
  const auto& r2 = monomial_basis(nv, 2);
  const auto& r1 = monomial_basis(nv, 1);
  // image of (l_1..l_8) in R_1^8 -> (sum_k phi4(j,k) l_k)_j in R_2^3
  Matrix<K> image(8 * r1.size(), 3 * r2.size());
  for (std::size_t k = 0; k < 8; ++k)
    for (std::size_t m = 0; m < r1.size(); ++m)
      for (std::size_t j = 0; j < 3; ++j)
        for (const auto& [e, c] : phi4(j, k).terms())
          image(k * r1.size() + m, j * r2.size() + r2.index_of(e + r1[m])) += c;
  const std::size_t img_rank = rank(image);
  Ext4Data<K> out;
  out.coker_dim_minus6 = 3;
  out.coker_dim_minus4 = 3 * r2.size() - img_rank;
  if (out.coker_dim_minus4 != 1)
    throw DegenerateInput("ext4_identification", "degree -4 cokernel has dimension " +
                                                     std::to_string(out.coker_dim_minus4) + ", expected 1");
  Matrix<K> lambda = kernel(image);  // 1 x 30 functional vanishing on the image
  auto eval = [&](const std::vector<K>& coeffs, std::size_t slot) {
    K acc(0);
    for (std::size_t i = 0; i < r2.size(); ++i) acc += lambda(0, slot * r2.size() + i) * coeffs[i];
    return acc;
  };
  for (std::size_t r = 0; r < v_basis.rows(); ++r)
    for (std::size_t j = 0; j < 3; ++j)
      if (!eval(v_basis.row_vector(r), j).is_zero())
        throw DegenerateInput("ext4_identification", "pairing does not vanish on V_q");
  if (dual_classes.size() != 3) throw InvalidArgument("ext4_identification: three dual classes expected");
  out.pairing = Matrix<K>(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    auto coeffs = dual_classes[i].to_dense();
    for (std::size_t j = 0; j < 3; ++j) out.pairing(i, j) = eval(coeffs, j);
  }
  if (!inverse(out.pairing)) throw DegenerateInput("ext4_identification", "pairing matrix is singular");
  return out;
}

/// Looks for a scalar B with phi*B skew-symmetric and the principal 6x6
/// pfaffians of phi*B spanning the ideal's cubic piece. Needs the generic
/// quartic shape 7T(-3) <- 7T(-4).
template <Field K>
std::optional<PolyMatrix<K>> skew_symmetrize(const Resolution<K>& res) {
  if (res.modules.size() != 4 || res.modules[1].degrees() != std::vector<int>(7, 3) ||
      res.modules[2].degrees() != std::vector<int>(7, 4))
    return std::nullopt;
  const PolyMatrix<K>& phi = res.maps[1];
  const int nv = res.ring.nvars;
  // (B phi)(i,j) + (B phi)(j,i) = 0, unknown B(i,k) at index 7i+k
  Matrix<K> eqs = Matrix<K>::with_width(49);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i; j < 7; ++j)
      for (int v = 0; v < nv; ++v) {
        const Exponent u = unit_exponent(v);
        std::vector<K> row(49);
        for (std::size_t k = 0; k < 7; ++k) {
          row[i * 7 + k] += phi(k, j).coefficient(u);
          row[j * 7 + k] += phi(k, i).coefficient(u);
        }
        eqs.append_row(row);
      }
  Matrix<K> sols = kernel(eqs);
  if (sols.rows() == 0) return std::nullopt;
  std::vector<K> pick(49);
  for (std::size_t r = 0; r < sols.rows(); ++r)
    for (std::size_t c = 0; c < 49; ++c) pick[c] += K(static_cast<long>(r + 1)) * sols(r, c);
  Matrix<K> B(7, 7);
  for (std::size_t c = 0; c < 49; ++c) B(c / 7, c % 7) = pick[c];
  if (!inverse(B)) return std::nullopt;
  PolyMatrix<K> skew = scale_left(B, phi);
  if (!is_skew(skew)) return std::nullopt;
  Matrix<K> gens = Matrix<K>::with_width(ring_dimension(nv, 3));
  for (std::size_t j = 0; j < 7; ++j) gens.append_row(res.maps[0](j, 0).to_dense());
  Matrix<K> pf = Matrix<K>::with_width(gens.cols());
  for (const auto& p : submaximal_pfaffians(skew))
    if (!p.is_zero()) pf.append_row(p.to_dense());
  if (!same_row_span(pf, gens)) return std::nullopt;
  return skew;
}

}  // namespace fano
