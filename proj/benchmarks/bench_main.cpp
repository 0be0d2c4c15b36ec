#include <benchmark/benchmark.h>

#include "fano/fano.hpp"

using namespace fano;
using Q = Rational;

namespace {

const SkewNet<Q>& klein_eta() {
  static const SkewNet<Q> eta = primitive_integral(eta_from_tor(min_res(q_perp(klein_net<Q>()).ideal)));
  return eta;
}

void BM_RrefRational(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix<Q> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Q(static_cast<long>((i * 7 + j * 13) % 11) - 5);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(10)->Arg(20)->Arg(40);

void BM_PerpKlein(benchmark::State& state) {
  auto f = parse_poly("x0^3*x1 + x1^3*x2 + x2^3*x0", kPlaneForms);
  for (auto _ : state) benchmark::DoNotOptimize(perp_ideal(f));
}
BENCHMARK(BM_PerpKlein);

void BM_MinResKleinNet(benchmark::State& state) {
  auto ideal = q_perp(klein_net<Q>()).ideal;
  for (auto _ : state) benchmark::DoNotOptimize(min_res(ideal));
}
BENCHMARK(BM_MinResKleinNet)->Unit(benchmark::kMillisecond);

void BM_CircleKlein(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(circle(klein_net<Q>()));
}
BENCHMARK(BM_CircleKlein)->Unit(benchmark::kMillisecond);

template <std::uint32_t P>
void BM_EnumeratePoints(benchmark::State& state) {
  auto eta = reduce_mod<Fp<P>>(klein_eta());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_points(eta, 1));
}
BENCHMARK(BM_EnumeratePoints<5>)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumeratePoints<11>)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BrutePointsF3(benchmark::State& state) {
  auto eta = reduce_mod<Fp<3>>(klein_eta());
  for (auto _ : state) benchmark::DoNotOptimize(brute_points(eta));
}
BENCHMARK(BM_BrutePointsF3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
