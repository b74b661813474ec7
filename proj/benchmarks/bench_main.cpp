#include <benchmark/benchmark.h>

#include "sadic/asymptotics.hpp"
#include "sadic/bounds.hpp"
#include "sadic/bratteli.hpp"
#include "sadic/rauzy.hpp"
#include "sadic/specfile.hpp"

#include <map>

namespace {

using namespace sadic;

const DirectiveSequence& spec(const char* name) {
  static std::map<std::string, DirectiveSequence> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_spec(std::string(SADIC_DATA_DIR) + "/" + name + ".sadic")).first;
  return it->second;
}

void BM_LanguageRank2(benchmark::State& st) {
  const auto& s = spec("rank2");
  for (auto _ : st) benchmark::DoNotOptimize(compute_language(s, 0, static_cast<std::size_t>(st.range(0))).count(st.range(0)));
}
BENCHMARK(BM_LanguageRank2)->Arg(50)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_LanguageFibonacci(benchmark::State& st) {
  const auto& s = spec("fibonacci");
  for (auto _ : st) benchmark::DoNotOptimize(compute_language(s, 0, static_cast<std::size_t>(st.range(0))).count(st.range(0)));
}
BENCHMARK(BM_LanguageFibonacci)->Arg(60)->Arg(1200)->Unit(benchmark::kMillisecond);

void BM_RauzyForest(benchmark::State& st) {
  auto t = compute_language(spec("thue_morse"), 0, 65);
  for (auto _ : st) {
    RauzyGraph g = build_rauzy(t, 64);
    benchmark::DoNotOptimize(forest_and_border_paths(g, g.right_special()).bound_ok);
  }
}
BENCHMARK(BM_RauzyForest)->Unit(benchmark::kMillisecond);

void BM_RecognizabilityRank2Level1(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(recognizability_radius(spec("rank2"), 1).radius);
}
BENCHMARK(BM_RecognizabilityRank2Level1)->Unit(benchmark::kMillisecond);

void BM_RelativeComplexity(benchmark::State& st) {
  const auto& s = spec("rank2");
  Morphism sigma = s.compose_range(0, 2);
  const Morphism& tau = s.at(2);
  for (auto _ : st) benchmark::DoNotOptimize(relative_complexity(sigma, tau, 500, Scope::images(2)).value);
}
BENCHMARK(BM_RelativeComplexity)->Unit(benchmark::kMillisecond);

void BM_VershikOrbit(benchmark::State& st) {
  auto B = diagram_from_sequence(spec("fibonacci_proper"), 10);
  for (auto _ : st) benchmark::DoNotOptimize(vershik_orbit_coding(B, 1, min_path(B, 0), 5000).size());
}
BENCHMARK(BM_VershikOrbit)->Unit(benchmark::kMillisecond);

void BM_SpecialChains(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(right_special_chains(spec("rank2"), 30).chains.size());
}
BENCHMARK(BM_SpecialChains)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
