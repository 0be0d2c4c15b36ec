#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fano;
using namespace fano::test;

namespace {
MultiPoly<Q> X(const char* s) { return parse_poly(s, kPlaneForms); }

BettiTable table(std::initializer_list<std::tuple<int, int, std::size_t>> t) {
  BettiTable b;
  for (auto [i, j, n] : t) b.entries[{i, j}] = n;
  return b;
}

/// Checks d^2 = 0, minimality and the Hilbert series identity degreewise.
template <Field K>
void check_resolution(const Resolution<K>& res) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
    auto prod = res.maps[i + 1] * res.maps[i];
    CHECK(prod.is_zero());
  }
  for (const auto& m : res.maps)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) CHECK((m(r, c).is_zero() || m(r, c).degree() > 0));
  const int n = res.ring.nvars;
  for (int d = 0; d <= res.cap; ++d) {
    long alt = 0;
    for (std::size_t i = 0; i < res.modules.size(); ++i) {
      long dim = static_cast<long>(res.modules[i].dim(d));
      alt += i % 2 ? -dim : dim;
    }
    CHECK(alt == static_cast<long>(res.quotient_hf[static_cast<std::size_t>(d)]));
    (void)n;
  }
}
}  // namespace

TEST_CASE("generic quartic resolution") {
  auto res = min_res(perp_ideal(klein_quartic()));
  CHECK_FALSE(res.truncated);
  CHECK(res.betti() == table({{0, 0, 1}, {1, 3, 7}, {2, 4, 7}, {3, 7, 1}}));
  check_resolution(res);
  auto f = rand_form<Q>(kPlaneForms, 4);
  auto r2 = min_res(perp_ideal(f));
  CHECK(r2.betti() == table({{0, 0, 1}, {1, 3, 7}, {2, 4, 7}, {3, 7, 1}}));
  check_resolution(r2);
}

TEST_CASE("generic cubic gives the Koszul complex") {
  auto g = rand_form<Q>(kPlaneForms, 3);
  auto res = min_res(perp_ideal(g));
  CHECK(res.betti() == table({{0, 0, 1}, {1, 2, 3}, {2, 4, 3}, {3, 6, 1}}));
  check_resolution(res);
}

TEST_CASE("Klein net resolution") {
  auto res = min_res(q_perp(klein_net<Q>()).ideal);
  CHECK(res.betti() == table({{0, 0, 1}, {1, 2, 7}, {2, 3, 8}, {2, 4, 3}, {3, 5, 8}, {4, 6, 3}}));
  CHECK(has_net_shape(res));
  check_resolution(res);
}

TEST_CASE("a low cap is reported as truncated") {
  auto res = min_res(perp_ideal(klein_quartic(), 4), 4);
  CHECK(res.truncated);
}

TEST_CASE("Tor duality on the Klein net") {
  auto res = min_res(q_perp(klein_net<Q>()).ideal);
  auto dd = tor_duality(res);
  CHECK(dd.sigma.is_skew());
  CHECK(inverse(dd.sigma).has_value());
  CHECK(inverse(dd.tau).has_value());
  auto rebuilt = scale_right(scale_left(dd.sigma, dd.psi1.transpose()), dd.tau);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(rebuilt(i, j) == dd.psi2(i, j));
}

TEST_CASE("Tor duality on a random net") {
  auto q = rand_general_net();
  auto res = min_res(q_perp(q).ideal);
  auto dd = tor_duality(res);
  CHECK(dd.sigma.is_skew());
  check_resolution(res);
}

TEST_CASE("Tor duality rejects other shapes") {
  auto res = min_res(perp_ideal(klein_quartic()));
  CHECK_THROWS_AS(tor_duality(res), DegenerateInput);
}

TEST_CASE("Ext^4 identification") {
  auto q = klein_net<Q>();
  auto qp = q_perp(q);
  auto res = min_res(qp.ideal);
  auto eta = eta_from_tor(res);
  auto ex = ext4_identification(res, qp.dual_classes, *eta.v_basis);
  CHECK(ex.coker_dim_minus4 == 1);
  CHECK(inverse(ex.pairing).has_value());
}

TEST_CASE("linear syzygies") {
  auto w = [](const char* s) { return parse_poly(s, kSpaceOperators); };
  // twisted cubic: 2 linear syzygies
  CHECK(linear_syzygies<Q>({w("w0*w2 - w1^2"), w("w0*w3 - w1*w2"), w("w1*w3 - w2^2")}).rows() == 2);
  CHECK(linear_syzygies<Q>({w("w0^2"), w("w1^2"), w("w2^2")}).rows() == 0);
}

TEST_CASE("skew-symmetrizing the quartic syzygy matrix") {
  auto res = min_res(perp_ideal(klein_quartic()));
  auto sk = skew_symmetrize(res);
  REQUIRE(sk);
  CHECK(is_skew(*sk));
  auto f = rand_form<Q>(kPlaneForms, 4);
  CHECK(skew_symmetrize(min_res(perp_ideal(f))).has_value());
  CHECK_FALSE(skew_symmetrize(min_res(perp_ideal(X("x0^4")))).has_value());
}
