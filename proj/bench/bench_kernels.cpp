#include <benchmark/benchmark.h>

#include "merobound/class_operators.hpp"
#include "merobound/membership.hpp"
#include "merobound/search.hpp"

using namespace merobound;

namespace {

const ClassParams kParams{0.5, 2.0, 0.5, Variant::StronglyStarlike};

struct GridFixture {
  ExteriorSeries<Complex> df, dg;
  std::vector<double> radii = MembershipGrid::default_radii();
  std::vector<Complex> roots = kernels::unit_roots(720);

  GridFixture()
      : df(ExteriorSeries<Complex>::one(1)), dg(ExteriorSeries<Complex>::one(1)) {
    const MeroSeries<Complex> f =
        MeroSeries<Complex>({Complex(0.02, -0.01), 0.01, Complex(0, 0.004)}).padded(24);
    df = operator_series(f, kParams);
    dg = operator_series(revert_mero(f), kParams);
  }

  kernels::GridProblem problem() const { return {df.coeffs(), dg.coeffs(), radii, roots, kParams}; }
};

void BM_GridSerial(benchmark::State& state) {
  const GridFixture fx;
  const auto p = fx.problem();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::grid_min_serial(p));
  state.SetItemsProcessed(state.iterations() * 2 * fx.radii.size() * fx.roots.size());
}
BENCHMARK(BM_GridSerial);

void BM_GridOmp(benchmark::State& state) {
  const GridFixture fx;
  const auto p = fx.problem();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::grid_min_omp(p, threads));
  state.SetItemsProcessed(state.iterations() * 2 * fx.radii.size() * fx.roots.size());
}
BENCHMARK(BM_GridOmp)->Arg(1)->Arg(2)->Arg(4);

SearchConfig bench_config(int threads) {
  SearchConfig c;
  c.budget = 500;
  c.seed = 1;
  c.threads = threads;
  return c;
}

void BM_SearchSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_serial(kParams, bench_config(1)));
}
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);

void BM_SearchOmp(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search(kParams, bench_config(threads)));
}
BENCHMARK(BM_SearchOmp)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
