// Copyright 2026 The rsfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "rsfa/automata.hpp"
#include "rsfa/gen.hpp"
#include "rsfa/learner.hpp"
#include "rsfa/matstar.hpp"
#include "rsfa/residual.hpp"

using namespace rsfa;

namespace {

Sfa target(std::uint64_t seed, std::size_t n_q = 8) {
  GenParams p;
  p.n_q = n_q;
  p.seed = derive_seed(7, seed);
  return random_sfa(p);
}

Predicate random_predicate(SplitMix64& rng, std::size_t pieces) {
  const Domain d = Domain::int32();
  Predicate p = Predicate::bottom(d);
  for (std::size_t i = 0; i < pieces; ++i) {
    Char a = rng.uniform(d.min, d.max), b = rng.uniform(d.min, d.max);
    if (a > b) std::swap(a, b);
    p |= Predicate::range(d, a, b);
  }
  return p;
}

void BM_PredicateOps(benchmark::State& state) {
  SplitMix64 rng(1);
  const auto a = random_predicate(rng, state.range(0));
  const auto b = random_predicate(rng, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize((a & b) | ~(a - b));
  }
}
BENCHMARK(BM_PredicateOps)->Arg(4)->Arg(32)->Arg(256);

void BM_Minterms(benchmark::State& state) {
  SplitMix64 rng(2);
  std::vector<Predicate> preds;
  for (int i = 0; i < state.range(0); ++i) preds.push_back(random_predicate(rng, 2));
  for (auto _ : state) benchmark::DoNotOptimize(minterms(preds, Domain::int32()));
}
BENCHMARK(BM_Minterms)->Arg(4)->Arg(8)->Arg(16);

void BM_Determinize(benchmark::State& state) {
  const auto m = target(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinize(m));
}
BENCHMARK(BM_Determinize)->DenseRange(0, 3);

void BM_ResidualProfile(benchmark::State& state) {
  const auto m = target(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(residual_profile(m));
}
BENCHMARK(BM_ResidualProfile)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_LearnRsfa(benchmark::State& state) {
  const auto m = target(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    Teacher t(m);
    benchmark::DoNotOptimize(learn_rsfa(t, interval_session_factory()));
  }
}
BENCHMARK(BM_LearnRsfa)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_LearnMatStar(benchmark::State& state) {
  const auto m = target(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    Teacher t(m);
    benchmark::DoNotOptimize(learn_dsfa(t, interval_session_factory()));
  }
}
BENCHMARK(BM_LearnMatStar)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
