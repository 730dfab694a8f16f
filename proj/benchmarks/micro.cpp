#include <benchmark/benchmark.h>

#include "mexec/bench.hpp"
#include "mexec/closure.hpp"
#include "mexec/enforcement.hpp"
#include "mexec/families.hpp"
#include "mexec/programs.hpp"

using namespace mexec;

namespace {

void BM_ClosureBruteforcePowerset(benchmark::State& state) {
  std::size_t n = std::size_t(state.range(0));
  auto pow = make_powerset(default_principals(n));
  std::vector<Label> singles = gen_input_labels(*pow, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure_bruteforce(*pow, singles));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosureBruteforcePowerset)->DenseRange(4, 14, 2)->Complexity();

void BM_ClosureGeneratorTruncated(benchmark::State& state) {
  std::size_t n = std::size_t(state.range(0));
  auto trunc = make_truncated_powerset(2, default_principals(n));
  std::vector<Label> singles;
  for (const auto& a : default_principals(n)) singles.push_back(Label::atoms({a}));
  CandidateGenerator gen = default_candidate_generator(*trunc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_closure(*trunc, singles, gen));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosureGeneratorTruncated)->DenseRange(8, 40, 8)->Complexity();

void BM_InClosure(benchmark::State& state) {
  std::size_t n = std::size_t(state.range(0));
  auto pow = make_powerset(default_principals(n));
  std::vector<Label> singles = gen_input_labels(*pow, n);
  Label probe = pow->top();
  for (auto _ : state) {
    benchmark::DoNotOptimize(in_closure(*pow, probe, singles));
  }
}
BENCHMARK(BM_InClosure)->DenseRange(8, 40, 8);

void BM_MefGoodSum(benchmark::State& state) {
  std::size_t n = std::size_t(state.range(0));
  auto pow = make_powerset(default_principals(n));
  LabeledSet input = gen_input(*pow, n);
  auto p = make_good_sum(pow, labels_of(input));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mef(*pow, *p, input));
  }
}
BENCHMARK(BM_MefGoodSum)->DenseRange(2, 12, 2);

void BM_MefGaloisSpecifyGoodSum(benchmark::State& state) {
  std::size_t n = std::size_t(state.range(0));
  auto pow = make_powerset(default_principals(n));
  LabeledSet input = gen_input(*pow, n);
  auto p = make_good_sum(pow, labels_of(input));
  GaloisConnection gc = specify_unspecify(pow, join_all(*pow, labels_of(input)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mef_galois(gc, *p, input));
  }
}
BENCHMARK(BM_MefGaloisSpecifyGoodSum)->DenseRange(8, 64, 8);

void BM_MefGaloisTruncPairwise(benchmark::State& state) {
  std::size_t n = std::size_t(state.range(0));
  auto pow = make_powerset(default_principals(n));
  LabeledSet input = gen_input(*pow, n);
  auto p = make_pairwise(pow);
  GaloisConnection gc = truncate_embed(default_principals(n), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mef_galois(gc, *p, input));
  }
}
BENCHMARK(BM_MefGaloisTruncPairwise)->DenseRange(4, 24, 4);

}  // namespace

BENCHMARK_MAIN();
