#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace fano;
using namespace fano::test;

namespace {
template <Field K>
std::vector<Matrix<K>> rows_of(const std::vector<SubspaceE<K>>& v) {
  std::vector<Matrix<K>> out;
  for (const auto& e : v) out.push_back(e.rows());
  return out;
}
}  // namespace

TEST_CASE("reduction") {
  auto q = reduce_mod<F11>(klein_net<Q>());
  CHECK(q.matrix(0)(1, 1) == F11(6));
  CHECK(q.matrix(0)(0, 2) == F11(5));
  CHECK_THROWS_WITH_AS(reduce_mod<Fp<2>>(klein_net<Q>()), doctest::Contains("M_0"), InvalidArgument);
  auto f = reduce_mod<Fp<5>>(parse_poly("7*x0^2 - 3*x1*x2 + 10*x2^2", kPlaneForms));
  CHECK(f.terms().size() == 2);
  CHECK(f.coefficient(unit_exponent(0) + unit_exponent(0)) == Fp<5>(2));
  CHECK(f.coefficient(unit_exponent(1) + unit_exponent(2)) == Fp<5>(2));
  SkewNet<Q> half;
  half.forms[1](0, 3) = Q(1, 3);
  half.forms[1](3, 0) = Q(-1, 3);
  CHECK_THROWS_WITH_AS(reduce_mod<Fp<3>>(half), doctest::Contains("eta_1"), InvalidArgument);
  auto prim = primitive_integral(half);
  CHECK(prim.forms[1](0, 3) == Q(1));
}

TEST_CASE("Klein eta is integral with unit entries") {
  const auto& eta = klein_eta();
  for (const auto& m : eta.forms)
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        const Q& c = m(i, j);
        CHECK((c.is_zero() || c == Q(1) || c == Q(-1)));
      }
}

TEST_CASE("enumeration agrees with brute force at p = 2 and 3") {
  auto e2 = reduce_mod<Fp<2>>(primitive_integral(klein_eta()));
  auto smart2 = enumerate_points(e2);
  auto brute2 = brute_points(e2);
  CHECK(brute2.visited == 11811);
  CHECK(rows_of(smart2) == rows_of(brute2.points));
  CHECK(smart2.size() == 15);

  auto e3 = reduce_mod<Fp<3>>(primitive_integral(klein_eta()));
  auto smart3 = enumerate_points(e3);
  auto brute3 = brute_points(e3);
  CHECK(brute3.visited == 925771);
  CHECK(rows_of(smart3) == rows_of(brute3.points));
  CHECK(smart3.size() == 40);
}

TEST_CASE("random skew nets agree with brute force at p = 2") {
  for (int t = 0; t < 3; ++t) {
    SkewNet<Fp<2>> eta({rand_skew<Fp<2>>(7), rand_skew<Fp<2>>(7), rand_skew<Fp<2>>(7)});
    CHECK(rows_of(enumerate_points(eta)) == rows_of(brute_points(eta).points));
  }
}

TEST_CASE("zero eta") {
  SkewNet<Fp<2>> zero2;
  auto b = brute_points(zero2);
  CHECK(b.visited == gaussian_binomial(7, 3, 2));
  CHECK(b.points.size() == 11811);
  CHECK(enumerate_points(zero2).size() == 11811);
  CHECK_THROWS_AS(enumerate_points(SkewNet<Fp<5>>()), InvalidArgument);
  CHECK_THROWS_AS(brute_points(SkewNet<Fp<5>>()), InvalidArgument);
  CHECK(gaussian_binomial(7, 3, 3) == 925771);
}

TEST_CASE("enumeration over F_11") {
  auto eta = reduce_mod<F11>(primitive_integral(klein_eta()));
  const auto& pts = klein_points_f11();
  CHECK(pts.size() == 1464);
  std::set<std::vector<std::uint32_t>> keys;
  for (const auto& e : pts) {
    CHECK(isotropic(eta, e));
    CHECK(row_basis(e.rows()) == e.rows());
    std::vector<std::uint32_t> k;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 7; ++j) k.push_back(e.rows()(i, j).value());
    keys.insert(k);
  }
  CHECK(keys.size() == pts.size());
  CHECK(std::is_sorted(pts.begin(), pts.end(),
                       [](const auto& a, const auto& b) { return canonical_less(a.rows(), b.rows()); }));
  CHECK(projective_count<F11>(7) == (19487171ull - 1) / 10);
}

TEST_CASE("census is deterministic") {
  auto eta = reduce_mod<Fp<5>>(primitive_integral(klein_eta()));
  auto a = census(eta, 5000, 7, 1);
  auto b = census(eta, 5000, 7, 0);
  CHECK(rows_of(a.points) == rows_of(b.points));
  CHECK(a.lines.pairs_tested == b.lines.pairs_tested);
  REQUIRE(a.lines.lines.size() == b.lines.lines.size());
  for (std::size_t i = 0; i < a.lines.lines.size(); ++i) CHECK(a.lines.lines[i].e1 == b.lines.lines[i].e1);
  CHECK(a.points.size() == 156);
}

TEST_CASE("sample_lines edge cases") {
  auto eta = reduce_mod<F11>(primitive_integral(klein_eta()));
  auto empty = sample_lines(eta, {}, 100);
  CHECK(empty.lines.empty());
  CHECK_FALSE(empty.truncated);
  auto none = sample_lines(eta, klein_points_f11(), 0);
  CHECK(none.lines.empty());
  CHECK(none.truncated);
  CHECK(none.pairs_tested == 0);
  for (const auto& l : sample_lines(eta, klein_points_f11(), 20000, 3).lines) {
    for (auto [al, be] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{2, 5}}) {
      Matrix<F11> m = Matrix<F11>::with_width(7);
      m.append_row(l.pencil[0]);
      m.append_row(l.pencil[1]);
      std::vector<F11> mix(7);
      for (std::size_t j = 0; j < 7; ++j) mix[j] = F11(al) * l.pencil[2][j] + F11(be) * l.pencil[3][j];
      m.append_row(mix);
      CHECK(isotropic(eta, m));
    }
  }
}
