#include <benchmark/benchmark.h>

#include "seifcalc/cuspidal.hpp"
#include "seifcalc/handles.hpp"
#include "seifcalc/openbook.hpp"
#include "seifcalc/plumbing.hpp"
#include "seifcalc/scenarios.hpp"
#include "seifcalc/seifert.hpp"

using namespace seifcalc;

namespace {

SeifertData many_fibers(int k) {
  SeifertData s;
  for (int i = 0; i < k; ++i) s.fibers.push_back({Integer(2 * i + 3), Integer(i + 1)});
  s.fibers.push_back({1, -Integer(k)});
  return s;
}

void BM_H1(benchmark::State& state) {
  SeifertData s = many_fibers(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h1(s));
}
BENCHMARK(BM_H1)->Arg(3)->Arg(8)->Arg(16);

void BM_Normalize(benchmark::State& state) {
  SeifertData s = many_fibers(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(s));
}
BENCHMARK(BM_Normalize)->Arg(3)->Arg(16);

void BM_MBoundSweep(benchmark::State& state) {
  const long max_q = state.range(0);
  for (auto _ : state) {
    Integer total = 0;
    for (long q = 3; q <= max_q; ++q)
      for (long p = 2; p < q; ++p)
        if (gcd(p, q) == 1) total += m_bound(p, q);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_MBoundSweep)->Arg(50)->Arg(150);

void BM_ClassifyMpqm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_Mpqm(13, 29, 400));
}
BENCHMARK(BM_ClassifyMpqm);

void BM_CuspResolutionDeterminant(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(determinant(intersection_matrix(cusp_resolution_graph(13, 29, 400))));
}
BENCHMARK(BM_CuspResolutionDeterminant);

void BM_LimakFigure1(benchmark::State& state) {
  IntMatrix q = intersection_matrix(figure1());
  std::vector<Rational> a(10, Rational(0));
  a[0] = Rational(50);
  a[1] = Rational(23);
  for (auto _ : state) benchmark::DoNotOptimize(limak_solve(q, a));
}
BENCHMARK(BM_LimakFigure1);

void BM_AttachLemma81(benchmark::State& state) {
  OpenBookSpec s;
  s.interior = {{13, 7}};
  s.bindings = {{{1, 0}, 51, 1}, {{2, -1}, 25, 1}};
  s.n = 52;
  for (auto _ : state) benchmark::DoNotOptimize(attach(open_book_multi(s), {2, 3}));
}
BENCHMARK(BM_AttachLemma81);

void BM_ScenarioSuite(benchmark::State& state) {
  ScenarioSuite suite = ScenarioSuite::load(SEIFCALC_BENCH_CASE_DATA);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(suite.run_all(parallel));
}
BENCHMARK(BM_ScenarioSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
