#include <benchmark/benchmark.h>

#include "piset/catalog.hpp"
#include "piset/engine.hpp"
#include "piset/ies.hpp"
#include "piset/verify.hpp"

namespace {

using piset::GroupSpec;

static void BM_Enumerate(benchmark::State& state, const char* name) {
  const piset::Group group = piset::construct_unvalidated(GroupSpec::parse(name));
  for (auto _ : state) {
    auto elements = piset::enumerate(group);
    benchmark::DoNotOptimize(elements.size());
  }
}
BENCHMARK_CAPTURE(BM_Enumerate, L2_27, "L2:27")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, L3_3, "L3_3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, Sz_8, "Sz:8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, L2_32, "L2:32")->Unit(benchmark::kMillisecond);

static void BM_SpectrumEnumerate(benchmark::State& state, const char* name) {
  const piset::Group group = piset::construct_unvalidated(GroupSpec::parse(name));
  for (auto _ : state) benchmark::DoNotOptimize(piset::spectrum_enumerate(group).size());
}
BENCHMARK_CAPTURE(BM_SpectrumEnumerate, Sz_8, "Sz:8")->Unit(benchmark::kMillisecond);

static void BM_DerivedSeries(benchmark::State& state, const char* name) {
  const piset::Group group = piset::construct_unvalidated(GroupSpec::parse(name));
  for (auto _ : state) benchmark::DoNotOptimize(piset::is_solvable(group).solvable);
}
BENCHMARK_CAPTURE(BM_DerivedSeries, L2_8, "L2:8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DerivedSeries, Sz_8, "Sz:8")->Unit(benchmark::kMillisecond);

static void BM_IsSimple(benchmark::State& state) {
  const piset::Group group = piset::construct_unvalidated(GroupSpec::parse("L2:8"));
  for (auto _ : state) benchmark::DoNotOptimize(piset::is_simple(group));
}
BENCHMARK(BM_IsSimple)->Unit(benchmark::kMillisecond);

static void BM_SpectrumFormula(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(piset::spectrum_formula(GroupSpec::sz(e)).size());
}
BENCHMARK(BM_SpectrumFormula)->Arg(7)->Arg(31)->Arg(61);

static void BM_WitnessSweep(benchmark::State& state) {
  const auto subsets = piset::small_subsets(2, 12, 3);
  for (auto _ : state) {
    std::size_t witnessed = 0;
    for (const auto& values : subsets) {
      const piset::CandidateSet t(values);
      if (!piset::classify(t).is_ies) witnessed += piset::witness(t).scanned.size();
    }
    benchmark::DoNotOptimize(witnessed);
  }
}
BENCHMARK(BM_WitnessSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
