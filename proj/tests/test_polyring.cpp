#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fano;
using namespace fano::test;

namespace {
MultiPoly<Q> X(const char* s) { return parse_poly(s, kPlaneForms); }
MultiPoly<Q> D(const char* s) { return parse_poly(s, kPlaneOperators); }
}  // namespace

TEST_CASE("apply examples") {
  CHECK(apply(D("d0^2"), X("x0^2")) == MultiPoly<Q>::constant(kPlaneForms, 2));
  CHECK(apply(D("d0*d1"), X("x0*x1")) == MultiPoly<Q>::constant(kPlaneForms, 1));
  CHECK(apply(D("d0^3"), X("x0^2")).is_zero());
  CHECK_THROWS_AS(apply(X("x0"), X("x0^2")), InvalidArgument);
  // the dual action uses the same kernel
  CHECK(apply(X("x0"), D("d0^2")) == D("2*d0"));
}

TEST_CASE("P_a^4 f = 24 f(a)") {
  const auto f = klein_quartic();
  const Point<Q> a({1, 1, 1});
  const auto pa = point_operator(kPlaneForms, a);
  CHECK(apply(power(pa, 4), f) == MultiPoly<Q>::constant(kPlaneForms, 72));
  CHECK(polar(f, a, 4) == MultiPoly<Q>::constant(kPlaneForms, 24 * f.evaluate(a.coords)));
}

TEST_CASE("polar examples") {
  CHECK(polar(klein_quartic(), Point<Q>({1, 0, 0}), 1) == X("3*x0^2*x1 + x2^3"));
  CHECK(polar(X("x0^4"), Point<Q>({0, 1, 0}), 1).is_zero());
  CHECK_THROWS_AS(Point<Q>({0, 0, 0}), InvalidArgument);
}

TEST_CASE("mixed polar matrix") {
  auto m = mixed_polar_matrix(klein_quartic(), Point<Q>({1, 0, 0}));
  auto b = [](int i) { return MultiPoly<Q>::variable(kPlaneForms, i); };
  MultiPoly<Q> z(kPlaneForms, 1);
  CHECK(m(0, 0) == Q(3) * b(1));
  CHECK(m(0, 1) == Q(3) * b(0));
  CHECK(m(1, 0) == Q(3) * b(0));
  CHECK(m(0, 2) == z);
  CHECK(m(1, 1) == z);
  CHECK(m(2, 2) == Q(3) * b(2));
  auto p = mixed_polar_matrix(X("x0^4"), Point<Q>({1, 0, 0}));
  CHECK(p(0, 0) == Q(12) * b(0));
  CHECK(rank(p.evaluate(std::vector<Q>{1, 2, 3})) == 1);
  for (int t = 0; t < 10; ++t) {
    auto f = rand_form<Q>(kPlaneForms, 4);
    auto mm = mixed_polar_matrix(f, rand_point<Q>(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(mm(i, j) == mm(j, i));
  }
}

TEST_CASE("apply matches repeated differentiation and is associative") {
  for (int t = 0; t < 30; ++t) {
    const RingTag forms = t % 2 ? kPlaneForms : kSpaceForms;
    auto f = rand_form<Q>(forms, 4);
    auto d1 = rand_form<Q>(forms.dual(), static_cast<int>(rand_int(0, 2)), -3, 3);
    auto d2 = rand_form<Q>(forms.dual(), static_cast<int>(rand_int(0, 2)), -3, 3);
    CHECK(apply(d1, f) == naive_apply(d1, f));
    CHECK(apply(d1 * d2, f) == apply(d1, apply(d2, f)));
  }
}

TEST_CASE("apolarity pairing is perfect for n <= 4") {
  for (RingTag forms : {kPlaneForms, kSpaceForms})
    for (int n = 0; n <= 4; ++n) {
      const auto& mons = monomial_basis(forms.nvars, n);
      Matrix<Q> gram(mons.size(), mons.size());
      for (std::size_t i = 0; i < mons.size(); ++i)
        for (std::size_t j = 0; j < mons.size(); ++j)
          gram(i, j) = apply(MultiPoly<Q>::monomial(forms.dual(), mons[i]), MultiPoly<Q>::monomial(forms, mons[j]))
                           .coefficient(Exponent{});
      CHECK(inverse(gram).has_value());
    }
}

TEST_CASE("f(a) = 0 iff P_a^m f = 0") {
  for (int t = 0; t < 30; ++t) {
    auto f = rand_form<Q>(kPlaneForms, 4);
    auto a = rand_point<Q>(3);
    if (t % 2 == 0 && !a.coords[0].is_zero()) {
      // force f(a) = 0
      const Q v = f.evaluate(a.coords) / power(MultiPoly<Q>::variable(kPlaneForms, 0), 4).evaluate(a.coords);
      f -= v * power(MultiPoly<Q>::variable(kPlaneForms, 0), 4);
    }
    const bool zero = f.evaluate(a.coords).is_zero();
    CHECK(apply(power(point_operator(kPlaneForms, a), 4), f).is_zero() == zero);
    CHECK(apply(power(point_operator(kPlaneForms, a), 5), f).is_zero());
  }
}

TEST_CASE("linear change and substitution") {
  Matrix<Q> swap{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  CHECK(linear_change(klein_quartic(), swap) == X("x0^3*x2 + x2^3*x1 + x1^3*x0"));
  auto f = rand_form<Q>(kPlaneForms, 3);
  CHECK(linear_change(f, Matrix<Q>::identity(3)) == f);
  CHECK(proportionality(Q(3) * f, f) == Q(3));
  CHECK_FALSE(proportionality(f + X("x0^3"), f).has_value());
}

TEST_CASE("homogeneity is enforced") {
  MultiPoly<Q> f(kPlaneForms, 2);
  CHECK_THROWS_AS(f.add_term(unit_exponent(0), Q(1)), InvalidArgument);
  CHECK_THROWS_AS(X("x0") + X("x1^2"), InvalidArgument);
}

TEST_CASE("polynomial matrices") {
  PolyMatrix<Q> m(2, 2, kPlaneForms);
  m(0, 0) = X("x0");
  m(0, 1) = X("x1");
  m(1, 0) = X("x2");
  m(1, 1) = X("x0");
  CHECK(determinant(m) == X("x0^2 - x1*x2"));
  CHECK(m.transpose()(0, 1) == X("x2"));
}
