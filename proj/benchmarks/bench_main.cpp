#include <benchmark/benchmark.h>

#include <random>

#include "torusbook/normal_form.hpp"
#include "torusbook/surgery_oracle.hpp"
#include "torusbook/tightness.hpp"

namespace {

using namespace torusbook;

TwistWord random_word(std::mt19937_64& rng, int tokens, int max_exp) {
  std::uniform_int_distribution<int> exp_dist(-max_exp, max_exp);
  std::uniform_int_distribution<int> gen_dist(0, 1);
  TwistWord word;
  for (int i = 0; i < tokens; ++i) {
    int e = exp_dist(rng);
    if (e == 0) e = 1;
    word = concat(word, single_twist(gen_dist(rng) ? Generator::X : Generator::Y, e));
  }
  return word;
}

void BM_Normalize(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::vector<TwistWord> words;
  for (int i = 0; i < 64; ++i) {
    words.push_back(random_word(rng, static_cast<int>(state.range(0)), 6));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(words[i % words.size()]));
    ++i;
  }
}
BENCHMARK(BM_Normalize)->Arg(10)->Arg(20)->Arg(40);

void BM_Classify(benchmark::State& state) {
  std::mt19937_64 rng(43);
  std::vector<CanonicalType> types;
  for (int i = 0; i < 64; ++i) {
    types.push_back(normalize(random_word(rng, 20, 5)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide(types[i % types.size()]).status);
    ++i;
  }
}
BENCHMARK(BM_Classify);

void BM_LinkingDeterminant(benchmark::State& state) {
  std::vector<Int> b(static_cast<std::size_t>(state.range(0)), Int(3));
  IntSymMatrix a = matrix_A(b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(det_exact(a));
  }
}
BENCHMARK(BM_LinkingDeterminant)->Arg(3)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
