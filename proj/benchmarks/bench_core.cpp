#include <benchmark/benchmark.h>

#include "belyi/belyi_maps.hpp"
#include "belyi/elliptic.hpp"
#include "belyi/hypergeom.hpp"

using namespace belyi;

static void BM_SeriesBinomialPow(benchmark::State& state) {
  const long trunc = state.range(0);
  for (auto _ : state) {
    Series s =
        series_binomial_pow(Scalar(2), Scalar(rat(5, 7)), rat(-19, 3), trunc);
    benchmark::DoNotOptimize(s.coeff(trunc - 1));
  }
}
BENCHMARK(BM_SeriesBinomialPow)->Arg(16)->Arg(64)->Arg(256);

static void BM_SolveForm11(benchmark::State& state) {
  const long m = state.range(0);
  for (auto _ : state) {
    Form11Solution sol = solve_form11(2, -7, 6, m);
    benchmark::DoNotOptimize(sol.report.expected_count);
  }
}
BENCHMARK(BM_SolveForm11)->Arg(2)->Arg(4)->Arg(8);

static void BM_Certify(benchmark::State& state) {
  BelyiMap map = assemble_two_linear(-19, -3, 1, 6, Scalar(-1));
  for (auto _ : state) {
    BelyiCertificate cert = certify(map);
    benchmark::DoNotOptimize(cert.valid);
  }
}
BENCHMARK(BM_Certify);

static void BM_MWEnumerate(benchmark::State& state) {
  SpecializedCurve sc = specialize(5);
  MWSpec mw = sc.mw;
  mw.bound = state.range(0);
  for (auto _ : state) {
    std::vector<PointQ> pts = mw_enumerate(mw);
    benchmark::DoNotOptimize(pts.size());
  }
}
BENCHMARK(BM_MWEnumerate)->Arg(2)->Arg(5)->Arg(10);

static void BM_HpgPoly(benchmark::State& state) {
  const long N = state.range(0);
  for (auto _ : state) {
    Poly f = hpg_poly({N, rat(-7, 2), rat(13, 3)});
    benchmark::DoNotOptimize(f.eval(Scalar(rat(-1, 2))));
  }
}
BENCHMARK(BM_HpgPoly)->Arg(8)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
