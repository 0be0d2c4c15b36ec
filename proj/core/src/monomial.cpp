#include "fano/monomial.hpp"

#include <algorithm>
#include <memory>

#include "fano/error.hpp"

namespace fano {

namespace {

std::size_t lookup_key(const Exponent& e, int nvars, int degree) {
  // the last exponent is implied by the degree
  std::size_t key = 0;
  for (int i = 0; i + 1 < nvars; ++i) key = key * static_cast<std::size_t>(degree + 1) + e[static_cast<std::size_t>(i)];
  return key;
}

void enumerate(int nvars, int var, int remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (var == nvars - 1) {
    cur[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    cur[static_cast<std::size_t>(var)] = 0;
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(k);
    enumerate(nvars, var + 1, remaining - k, cur, out);
  }
  cur[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1 || nvars > 4) throw InvalidArgument("monomial basis: 1..4 variables supported");
  if (degree < 0) return;
  Exponent cur{};
  enumerate(nvars, 0, degree, cur, monomials_);
  std::sort(monomials_.begin(), monomials_.end(), GrevlexGreater{});
  std::size_t table = 1;
  for (int i = 0; i + 1 < nvars; ++i) table *= static_cast<std::size_t>(degree + 1);
  lookup_.assign(table, UINT32_MAX);
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    lookup_[lookup_key(monomials_[i], nvars, degree)] = static_cast<std::uint32_t>(i);
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  if (total_degree(e) != degree_) throw InvalidArgument("monomial basis: degree mismatch");
  for (int i = nvars_; i < 4; ++i)
    if (e[static_cast<std::size_t>(i)] != 0) throw InvalidArgument("monomial basis: variable out of range");
  return lookup_[lookup_key(e, nvars_, degree_)];
}

const MonomialBasis& monomial_basis(int nvars, int degree) {
  static const auto cache = [] {
    std::vector<std::unique_ptr<MonomialBasis>> v;
    for (int n = 1; n <= 4; ++n)
      for (int d = 0; d <= kMaxBasisDegree; ++d) v.push_back(std::make_unique<MonomialBasis>(n, d));
    return v;
  }();
  static const MonomialBasis empty3(3, -1), empty4(4, -1), empty1(1, -1), empty2(2, -1);
  if (nvars < 1 || nvars > 4) throw InvalidArgument("monomial basis: 1..4 variables supported");
  if (degree < 0) {
    switch (nvars) {
      case 1: return empty1;
      case 2: return empty2;
      case 3: return empty3;
      default: return empty4;
    }
  }
  if (degree > kMaxBasisDegree) throw InvalidArgument("monomial basis: degree too large");
  return *cache[static_cast<std::size_t>((nvars - 1) * (kMaxBasisDegree + 1) + degree)];
}

std::size_t ring_dimension(int nvars, int degree) {
  if (degree < 0) return 0;
  std::size_t num = 1, den = 1;
  for (int i = 1; i < nvars; ++i) {
    num *= static_cast<std::size_t>(degree + i);
    den *= static_cast<std::size_t>(i);
  }
  return num / den;
}

}  // namespace fano
