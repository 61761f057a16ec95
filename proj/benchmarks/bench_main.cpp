#include <benchmark/benchmark.h>

#include <random>

#include "ccsurg/catalog.hpp"
#include "ccsurg/dedekind.hpp"
#include "ccsurg/obstructions.hpp"
#include "ccsurg/seifert.hpp"
#include "ccsurg/smith.hpp"

using namespace ccsurg;

static void BM_DedekindReciprocity(benchmark::State& state) {
    const long p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum(2, p));
}
BENCHMARK(BM_DedekindReciprocity)->Arg(9)->Arg(1001)->Arg(1000003);

static void BM_DedekindClosedFormSweep(benchmark::State& state) {
    for (auto _ : state)
        for (long p = 1; p <= 1000; p += 2) benchmark::DoNotOptimize(a2_required_by_surgery(p));
}
BENCHMARK(BM_DedekindClosedFormSweep)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> entry(-9, 9);
    IntegerMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(6)->Arg(12)->Arg(24);

static void BM_SeifertExampleHomology(benchmark::State& state) {
    SeifertData s;
    s.fibers = {{3, -1}, {5, 1}, {5, -1}, {2, 1}};
    for (auto _ : state) benchmark::DoNotOptimize(h1_exterior(s));
}
BENCHMARK(BM_SeifertExampleHomology);

static void BM_Thm2Solve(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(thm2_solve(state.range(0), state.range(0)));
}
BENCHMARK(BM_Thm2Solve)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

static void BM_Thm3Enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(thm3_enumerate(state.range(0)));
}
BENCHMARK(BM_Thm3Enumerate)->Arg(8)->Arg(32);

static void BM_Pipeline(benchmark::State& state) {
    std::vector<KnotRecord> all;
    for (const char* f : {"montesinos_seifert.json", "alternating.json", "toroidal_only.json"}) {
        auto c = load_catalog_file(std::string(CCSURG_DATA_DIR) + "/catalog/" + f);
        all.insert(all.end(), c.records.begin(), c.records.end());
    }
    for (auto _ : state) benchmark::DoNotOptimize(thm4_pipeline(all));
}
BENCHMARK(BM_Pipeline)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
