#include <benchmark/benchmark.h>

#include "cfc/construct.hpp"
#include "cfc/online.hpp"
#include "cfc/oracle.hpp"
#include "cfc/verify.hpp"

namespace {

void BM_verify_2scf(benchmark::State& state) {
  cfc::Coloring c = cfc::construct_2scf(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cfc::verify_kscf(c, 2).ok);
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(c.size()));
}
BENCHMARK(BM_verify_2scf)->DenseRange(8, 14, 2);

void BM_verify_kcf(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  cfc::Coloring c = cfc::construct_kcf(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cfc::verify_kcf(c, 2).ok);
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_verify_kcf)->Range(64, 4096);

void BM_construct_kcf(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cfc::construct_kcf(n, 3).size());
}
BENCHMARK(BM_construct_kcf)->Range(256, 65536);

void BM_oracle_g2(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    cfc::SearchResult r = cfc::oracle_max_points(2, m, cfc::Mode::kscf);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_oracle_g2)->DenseRange(4, 6, 1);

void BM_online_random_fit(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    cfc::Arrival arrival =
        cfc::generate_arrival(n, cfc::OrderKind::random, 17);
    cfc::TrialReport rep =
        cfc::online_color(arrival, 1, cfc::Strategy::random_fit, 17);
    benchmark::DoNotOptimize(rep.colors_used);
  }
}
BENCHMARK(BM_online_random_fit)->Range(64, 1024);

}  // namespace

BENCHMARK_MAIN();
