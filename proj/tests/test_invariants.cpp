#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fano;
using namespace fano::test;

namespace {
MultiPoly<Q> X(const char* s) { return parse_poly(s, kPlaneForms); }
}  // namespace

TEST_CASE("Aronhold examples") {
  CHECK(aronhold(X("x0^3 + x1^3 + x2^3")).is_zero());
  CHECK(aronhold(X("x0^3")).is_zero());
  CHECK(aronhold(X("x0*x1*x2")) == Q(-1, 1296));
  CHECK_THROWS_AS(aronhold(X("x0^2")), InvalidArgument);
  CHECK_THROWS_AS(aronhold(reduce_poly<Fp<3>>(X("x0^3"))), InvalidArgument);
}

TEST_CASE("Aronhold vanishes on sums of three cubes and is orbit invariant") {
  for (int t = 0; t < 20; ++t) {
    std::vector<MultiPoly<Q>> l;
    for (int i = 0; i < 3; ++i) l.push_back(rand_nonzero_form<Q>(kPlaneForms, 1));
    auto g = power_sum(l, {rand_scalar<Q>(1, 5), rand_scalar<Q>(1, 5), rand_scalar<Q>(1, 5)}, 3);
    if (g.is_zero()) continue;
    CHECK(aronhold(g).is_zero());
  }
  for (int t = 0; t < 20; ++t) {
    auto g = rand_nonzero_form<Q>(kPlaneForms, 3);
    auto m = rand_matrix<Q>(3, 3);
    if (determinant(m).is_zero()) continue;
    CHECK(aronhold(linear_change(g, m)).is_zero() == aronhold(g).is_zero());
    auto fermat = linear_change(X("x0^3 + x1^3 + x2^3"), m);
    CHECK(aronhold(fermat).is_zero());
  }
}

TEST_CASE("complete intersection perp") {
  CHECK(is_complete_intersection_perp(X("x0^3 + x1^3 + x2^3")) == CubicPerpKind::NotCompleteIntersection);
  CHECK(is_complete_intersection_perp(X("x0^3")) == CubicPerpKind::Cone);
  int ci = 0;
  for (int t = 0; t < 5; ++t) {
    auto g = rand_form<Q>(kPlaneForms, 3);
    ci += is_complete_intersection_perp(g) == CubicPerpKind::CompleteIntersection;
    CHECK((is_complete_intersection_perp(g) == CubicPerpKind::CompleteIntersection) == !aronhold(g).is_zero());
  }
  CHECK(ci >= 4);
}

TEST_CASE("covariant quartic") {
  CHECK(proportionality(covariant_quartic(klein_quartic()), klein_quartic()).has_value());
  auto mu = X("x0^4 + x1^4 + x2^4 + 2*x0^2*x1^2 + 2*x0^2*x2^2 + 2*x1^2*x2^2");
  CHECK(proportionality(covariant_quartic(mu), mu).has_value());
  auto f = rand_form<Q>(kPlaneForms, 4);
  auto s = covariant_quartic(f);
  CHECK(s.degree() == 4);
  CHECK_FALSE(s.is_zero());
  // pointwise definition: S_F(a) = I4(P_a f)
  for (int t = 0; t < 20; ++t) {
    auto a = rand_point<Q>(3);
    CHECK(s.evaluate(a.coords) == aronhold(polar(f, a, 1)));
  }
  CHECK_THROWS_AS(covariant_quartic(X("x0^4")), DegenerateInput);
}

TEST_CASE("Hessian") {
  CHECK(hessian(X("x0^3 + x1^3 + x2^3")) == X("216*x0*x1*x2"));
  CHECK(hessian(X("x0^3")).is_zero());
  CHECK(hessian(rand_form<Q>(kPlaneForms, 4)).degree() == 6);
  // oracle: determinant of naive second partials
  auto f = rand_form<Q>(kPlaneForms, 3);
  PolyMatrix<Q> h(3, 3, kPlaneForms);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = naive_diff(naive_diff(f, i), j);
  auto det = determinant(h);
  CHECK((det.is_zero() ? hessian(f).is_zero() : hessian(f) == det));
}

TEST_CASE("T_F fiber on the Klein quartic") {
  const Point<Q> a({1, 0, 0});
  auto fib = tf_fiber_ideal(klein_quartic(), a);
  auto want = GradedIdeal<Q>::generated_by(kPlaneForms, {X("x0^2"), X("x0*x2"), X("x1*x2")}, 6);
  for (int d = 0; d <= 6; ++d) CHECK(same_row_span(fib.ideal.piece(d), want.piece(d)));
  CHECK(fib.colength == 3);
  CHECK(fib.stable);
  CHECK(mixed_polar_rank(klein_quartic(), a, a) == 2);
}

TEST_CASE("T_F fiber over points of the Klein curve has degree 3") {
  // (0:1:0), (0:0:1) and (1:0:0) lie on the curve
  for (auto pt : {std::vector<Q>{0, 1, 0}, std::vector<Q>{0, 0, 1}}) {
    auto fib = tf_fiber_ideal(klein_quartic(), Point<Q>(pt));
    CHECK(fib.colength == 3);
  }
}

TEST_CASE("T_F fiber over a general point") {
  auto f = klein_quartic();
  auto fib = tf_fiber_ideal(f, Point<Q>({1, 2, 3}));
  MESSAGE("general fiber quotient HF " << tuple_str(fib.quotient_hf));
  CHECK(fib.stable);
}
