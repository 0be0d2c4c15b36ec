#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fano;
using namespace fano::test;

TEST_CASE("parsing examples") {
  auto k = parse_poly("x0^3*x1 + x1^3*x2 + x2^3*x0", kPlaneForms);
  CHECK(k.degree() == 4);
  CHECK(k.terms().size() == 3);
  CHECK(k.coefficient(detail::exp3(3, 1, 0)) == Q(1));
  auto q = parse_poly("1/2*z1^2 - z0*z2");
  CHECK(q.ring() == kSpaceForms);
  CHECK(q == klein_net<Q>().quadric(0));
  CHECK(parse_poly("-x0*x0") == parse_poly("-x0^2"));
  CHECK(parse_poly("2*x0 - 2*x0", kPlaneForms).is_zero());
  CHECK(parse_poly("3", kSpaceOperators).degree() == 0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_poly("x0 + x1^2"), doctest::Contains("degree 2 after a term of degree 1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x0 + z1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x3"), ParseError);
  CHECK_THROWS_AS(parse_poly("x0 +"), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0*x0"), ParseError);
  CHECK_THROWS_AS(parse_poly("x0^"), ParseError);
  CHECK_THROWS_AS(parse_poly("5"), ParseError);
  CHECK_THROWS_AS(parse_poly("d0", kPlaneForms), ParseError);
  try {
    parse_poly("x0*x1 + 2*y");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 10);
  }
}

TEST_CASE("print and parse round trip") {
  for (int t = 0; t < 30; ++t) {
    RingTag ring = t % 4 == 0 ? kPlaneForms : t % 4 == 1 ? kPlaneOperators : t % 4 == 2 ? kSpaceForms : kSpaceOperators;
    auto f = rand_nonzero_form<Q>(ring, 1 + t % 4);
    if (t % 3 == 0) f = Q(3, 7) * f;
    const std::string s = print_poly(f);
    CHECK(parse_poly(s, ring) == f);
    CHECK(print_poly(parse_poly(s, ring)) == s);
  }
  CHECK(print_poly(klein_quartic()) == "x0^3*x1 + x1^3*x2 + x0*x2^3");
  CHECK(print_poly(parse_poly("x0*x2^3 + x1^3*x2 + x0^3*x1")) == print_poly(klein_quartic()));
}

TEST_CASE("document splitting") {
  auto v = split_polys("z0^2 # first\n\n z1^2 ; z2^2\n# comment only\n");
  REQUIRE(v.size() == 3);
  CHECK(parse_poly(v[1]) == parse_poly("z1^2"));
}

TEST_CASE("report round trip") {
  Report r;
  r.set("a.b", "x0^2 + 1/2*x1^2");
  r.set("n", 7);
  r.set("flag", true);
  r.set("tuple", tuple_str(std::vector<std::size_t>{1, 3, 6, 3, 1}));
  auto back = Report::parse(r.str());
  CHECK(back.entries() == r.entries());
  CHECK(back.get("tuple") == std::optional<std::string>("(1,3,6,3,1)"));
  CHECK_FALSE(back.get("missing"));
  CHECK(r.str() == "a.b: x0^2 + 1/2*x1^2\nn: 7\nflag: true\ntuple: (1,3,6,3,1)\n");
}

TEST_CASE("circle on the Klein net") {
  auto r = circle(klein_net<Q>());
  CHECK(r.passed());
  CHECK(r.pfaffian_hf == std::vector<std::size_t>{1, 3, 6, 3, 1, 0});
  CHECK(r.socle == r.socle.leading_coefficient() * klein_quartic());
  CHECK(proportionality(r.discriminant, linear_change(klein_quartic(), Matrix<Q>{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})).has_value());
  for (const auto& v : r.verdicts) {
    CHECK(v.pass);
    if (v.name != "pfaffian_hf") CHECK(*v.scalar == Q(-16));
  }
  auto report = to_report(r);
  CHECK(report.get("result") == std::optional<std::string>("pass"));
  CHECK(report.get("betti") == std::optional<std::string>("(0,0,1) (1,2,7) (2,3,8) (2,4,3) (3,5,8) (4,6,3)"));
  CHECK(report.get("pfaffian.hf") == std::optional<std::string>("(1,3,6,3,1,0)"));
  CHECK(to_report(circle(klein_net<Q>())).str() == report.str());
}

TEST_CASE("circle on random nets") {
  for (int t = 0; t < 2; ++t) {
    auto r = circle(rand_general_net());
    CHECK(r.passed());
    auto v = r.verdicts[1];
    CHECK(v.name == "covariant_vs_discriminant");
    REQUIRE(v.scalar);
    CHECK(covariant_quartic(r.socle_u) == *v.scalar * r.discriminant);
  }
}

TEST_CASE("circle over F_11") {
  auto r = circle(reduce_mod<F11>(klein_net<Q>()));
  CHECK(r.passed());
}

TEST_CASE("circle stage errors") {
  auto z = [](const char* s) { return parse_poly(s, kSpaceForms); };
  try {
    circle(NetOfQuadrics<Q>::from_quadrics({z("z0^2"), z("z1^2"), z("z2^2")}));
    FAIL("no error");
  } catch (const DegenerateInput& e) {
    CHECK(e.stage() == "q_perp");
  }
  try {
    circle(NetOfQuadrics<Q>::from_quadrics({z("z0^2"), z("z0^2"), z("z2^2")}));
    FAIL("no error");
  } catch (const DegenerateInput& e) {
    CHECK(e.stage() == "input");
  }
}

TEST_CASE("failed verdicts carry a witness") {
  auto v = proportional_verdict<Q>("t", parse_poly("x0^2 + x1^2"), parse_poly("x0^2 - x1^2"));
  CHECK_FALSE(v.pass);
  CHECK(v.witness.find("x1^2") != std::string::npos);
  auto z = proportional_verdict<Q>("t", MultiPoly<Q>(kPlaneForms, 2), parse_poly("x0^2"));
  CHECK(z.witness == "left side is zero");
}
