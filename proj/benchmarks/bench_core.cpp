#include <string>

#include <benchmark/benchmark.h>

#include "overgroup/markedspace.hpp"
#include "overgroup/oracle.hpp"
#include "overgroup/sections.hpp"
#include "overgroup/wordproblem.hpp"
#include "overgroup/words.hpp"

namespace {

using namespace ovg;

std::string long_raw_word(std::size_t pairs) {
  static const char ks[] = {'b', 'c', 'd', 'x', 'B', 'C', 'D'};
  std::string s;
  s.reserve(pairs * 2);
  for (std::size_t i = 0; i < pairs; ++i) {
    s += 'a';
    s += ks[i % 7];
  }
  return s;
}

void BM_reduce(benchmark::State& state) {
  const std::string text = long_raw_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ReducedWord::parse(text));
  }
}
BENCHMARK(BM_reduce)->Arg(64)->Arg(512);

void BM_split(benchmark::State& state) {
  const Oracle o = Oracle::parse("(012)");
  const ReducedWord w = ReducedWord::parse(long_raw_word(128));
  for (auto _ : state) {
    benchmark::DoNotOptimize(split(w, o));
  }
}
BENCHMARK(BM_split);

void BM_exact_decider(benchmark::State& state) {
  const ReducedWord w = ReducedWord::parse(long_raw_word(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    Decider d(GroupSpec::parse("exact@(01)"));
    benchmark::DoNotOptimize(d.is_identity(w));
  }
}
BENCHMARK(BM_exact_decider)->Arg(16)->Arg(64);

void BM_alpha_decider(benchmark::State& state) {
  const ReducedWord w = ReducedWord::parse(long_raw_word(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    Decider d(GroupSpec::parse("alpha@(01)"));
    benchmark::DoNotOptimize(d.is_identity(w));
  }
}
BENCHMARK(BM_alpha_decider)->Arg(16)->Arg(64);

void BM_ball(benchmark::State& state) {
  for (auto _ : state) {
    Decider d(GroupSpec::parse("alpha@(01)"));
    benchmark::DoNotOptimize(ball(d, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ball)->Arg(3)->Arg(4);

void BM_level_permutation(benchmark::State& state) {
  const Oracle o = Oracle::parse("(012)");
  const ReducedWord w = ReducedWord::parse(long_raw_word(64));
  for (auto _ : state) {
    benchmark::DoNotOptimize(level_permutation(w, o, 6));
  }
}
BENCHMARK(BM_level_permutation);

}  // namespace

BENCHMARK_MAIN();
