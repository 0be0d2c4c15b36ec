#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fano;
using namespace fano::test;

namespace {
MultiPoly<Q> X(const char* s) { return parse_poly(s, kPlaneForms); }

std::vector<MultiPoly<Q>> rand_lines(int s) {
  std::vector<MultiPoly<Q>> l;
  for (int i = 0; i < s; ++i) l.push_back(rand_nonzero_form<Q>(kPlaneForms, 1));
  return l;
}

MultiPoly<Q> ones_sum(const std::vector<MultiPoly<Q>>& l) { return power_sum(l, std::vector<Q>(l.size(), Q(1))); }
MultiPoly<Q> rand_power_sum(int s) { return ones_sum(rand_lines(s)); }
}  // namespace

TEST_CASE("rank lower bound") {
  CHECK(rank_lower(X("x0^4")) == 1);
  for (int s = 2; s <= 6; ++s)
    for (int t = 0; t < 5; ++t) CHECK(rank_lower(rand_power_sum(s)) == static_cast<std::size_t>(s));
  CHECK(rank_lower(remark_family(Q(2))) == 5);
  CHECK_THROWS_AS(rank_lower(MultiPoly<Q>(kPlaneForms, 4)), InvalidArgument);
}

TEST_CASE("classification table rows") {
  const auto& table = quartic_table();
  auto check_row = [&](const MultiPoly<Q>& f, int row) {
    auto c = classify(f);
    INFO("f = " << f << " hf " << tuple_str(c.hilbert) << " gens " << tuple_str(c.generators));
    CHECK(c.row == row);
    CHECK(c.hilbert == table[static_cast<std::size_t>(row)].hilbert);
  };
  check_row(klein_quartic(), 0);
  check_row(rand_power_sum(5), 1);
  check_row(rand_power_sum(4), 2);
  // three concurrent lines plus a fourth
  check_row(ones_sum({X("x0"), X("x1"), X("x0 + x1"), X("x2")}), 3);
  check_row(X("x0^4 + x1^4 + x2^4"), 4);
  check_row(X("x0^4 + x1^4 + 6*x0^2*x1^2 + 2*x0^3*x1"), 5);
  check_row(X("x0^4 + x1^4"), 6);
  check_row(X("x0^4"), 7);
  CHECK_THROWS_AS(classify(MultiPoly<Q>(kPlaneForms, 4)), InvalidArgument);
}

TEST_CASE("solve weights") {
  auto l = rand_lines(2);
  while (proportionality(l[0], l[1])) l = rand_lines(2);
  auto f = power_sum(l, {Q(2), Q(3)});
  auto w = solve_weights(f, l);
  CHECK(w.status == WeightStatus::Unique);
  CHECK(w.weights == std::vector<Q>{2, 3});
  auto one = solve_weights(X("x0^4"), {X("x0")});
  CHECK(one.status == WeightStatus::Unique);
  CHECK(one.weights == std::vector<Q>{1});
  CHECK(solve_weights(klein_quartic(), {X("x0"), X("x1")}).status == WeightStatus::NotInSpan);
  CHECK_THROWS_AS(solve_weights(X("x0^4"), {X("x0"), X("2*x0")}), InvalidArgument);
  for (int t = 0; t < 10; ++t) {
    const int s = static_cast<int>(rand_int(1, 6));
    auto ls = rand_lines(s);
    std::vector<Q> ws;
    for (int i = 0; i < s; ++i) ws.push_back(rand_scalar<Q>(1, 9));
    bool distinct = true;
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) distinct = distinct && !proportionality(ls[static_cast<std::size_t>(i)], ls[static_cast<std::size_t>(j)]);
    if (!distinct) continue;
    auto sol = solve_weights(power_sum(ls, ws), ls);
    if (sol.status == WeightStatus::Unique) CHECK(sol.weights == ws);
  }
}

TEST_CASE("apolarity of ideals") {
  auto f = klein_quartic();
  auto unit = GradedIdeal<Q>::generated_by(kPlaneOperators, {MultiPoly<Q>::constant(kPlaneOperators, 1)}, 4);
  CHECK_FALSE(is_apolar(unit, f));
  CHECK(is_apolar(perp_ideal(f, 5), f));
  int apolar = 0;
  for (int t = 0; t < 5; ++t) apolar += is_apolar(points_ideal(rand_lines(6), 5), rand_form<Q>(kPlaneForms, 4));
  CHECK(apolar == 0);
}

TEST_CASE("hexagons from random blocks") {
  for (int t = 0; t < 3; ++t) {
    PolyMatrix<Q> psi(4, 3, kPlaneOperators);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) psi(i, j) = rand_nonzero_form<Q>(kPlaneOperators, 1);
    auto h = hexagon_from_block(psi);
    CHECK(h.quotient_hf == std::vector<std::size_t>{1, 3, 6, 6, 6, 6});
    CHECK(h.generators.size() == 4);
  }
  PolyMatrix<Q> bad(4, 3, kPlaneOperators);
  for (std::size_t i = 0; i < 4; ++i) {
    bad(i, 0) = rand_nonzero_form<Q>(kPlaneOperators, 1);
    bad(i, 1) = bad(i, 0);
    bad(i, 2) = rand_nonzero_form<Q>(kPlaneOperators, 1);
  }
  CHECK_THROWS_AS(hexagon_from_block(bad), DegenerateInput);
}

TEST_CASE("hexagons from isotropic planes of the Klein skew net over F_11") {
  auto eta = reduce_mod<F11>(primitive_integral(klein_eta()));
  auto F = dual_socle(pfaffian_ideal(eta).ideal);
  const auto& pts = klein_points_f11();
  REQUIRE(pts.size() >= 20);
  int valid = 0;
  for (std::size_t i = 0; i < pts.size(); i += pts.size() / 20) {
    auto h = hexagon_from_block(hexagon_block(eta, pts[i]));
    CHECK(h.quotient_hf == std::vector<std::size_t>{1, 3, 6, 6, 6, 6});
    CHECK(is_apolar(h.ideal, F));
    ++valid;
  }
  CHECK(valid >= 20);
}

TEST_CASE("double-line family") {
  CHECK(remark_family(Q(1)) == X("x1^4 + x0*x1^3 + 6*x1^2*x2^2 + x0*x2^3 + x2^4"));
  for (long t : {1, 2, 3}) {
    auto f = remark_family(Q(t));
    CHECK(rank_lower(f) == 5);
    auto q = perp(f, 2);
    REQUIRE(q.rows() == 1);
    auto sq = square_root_up_to_scalar(MultiPoly<Q>::from_dense(kPlaneOperators, 2, q.row(0)));
    REQUIRE(sq);
    CHECK(sq->first * sq->second * sq->second == MultiPoly<Q>::from_dense(kPlaneOperators, 2, q.row(0)));
  }
  CHECK_THROWS_AS(remark_family(Q(0)), InvalidArgument);
  CHECK_FALSE(square_root_up_to_scalar(X("x0*x1")).has_value());
}
