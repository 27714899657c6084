#include <random>

#include <benchmark/benchmark.h>

#include <antisq/antisquares.hpp>
#include <antisq/enumeration.hpp>
#include <antisq/fibanalysis.hpp>
#include <antisq/repetitions.hpp>
#include <antisq/search.hpp>

using namespace antisq;

namespace {

// Random walk of push/pop on a validator, as the DFS does.
template <class V>
void walk(benchmark::State& state, V& v) {
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    const Letter a = static_cast<Letter>(rng() & 1);
    if (!v.push(a) || v.size() >= static_cast<std::size_t>(state.range(0))) v.pop();
    if (v.size() > 0 && (rng() & 7) == 0) v.pop();
  }
}

void BM_PowerValidator(benchmark::State& state) {
  IncrementalPowerValidator v(PowerBound::parse("7/3"));
  walk(state, v);
}
BENCHMARK(BM_PowerValidator)->Arg(64)->Arg(256);

void BM_AntisquareTracker(benchmark::State& state) {
  IncrementalAntisquareTracker v(std::nullopt, 16);
  walk(state, v);
}
BENCHMARK(BM_AntisquareTracker)->Arg(64)->Arg(256);

void BM_CriticalExponent(benchmark::State& state) {
  const Word w = word_w_prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(critical_exponent(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CriticalExponent)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity();

void BM_Inventory(benchmark::State& state) {
  const Word w = fibonacci_word_prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inventory(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Inventory)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity();

void BM_LongestWord(benchmark::State& state) {
  ConstraintSet c;
  c.power = PowerBound::parse("17/7");
  c.max_distinct_antisquares = 15;
  for (auto _ : state) benchmark::DoNotOptimize(longest_word(c));
}
BENCHMARK(BM_LongestWord)->Unit(benchmark::kMillisecond);

void BM_CountGood154(benchmark::State& state) {
  ConstraintSet c = ConstraintSet::good();
  c.power = PowerBound::parse("15/4");
  for (auto _ : state) benchmark::DoNotOptimize(count_by_length(c, 120));
}
BENCHMARK(BM_CountGood154)->Unit(benchmark::kMillisecond);

void BM_AutomatonCount(benchmark::State& state) {
  const auto a = FactorAvoidanceAutomaton::build(good_core_forbidden());
  for (auto _ : state) benchmark::DoNotOptimize(count_with_automaton(a, 1000));
}
BENCHMARK(BM_AutomatonCount)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
