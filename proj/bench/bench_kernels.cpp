// Copyright 2026 The penrose-quantale Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "penrose/relation.hpp"
#include "penrose/representation.hpp"
#include "penrose/theory.hpp"

namespace {

penrose::Relation random_relation(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  penrose::Relation r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) r.set(i, j);
  return r;
}

void BM_ComposeParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_relation(n, 0.05, 1), b = random_relation(n, 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(penrose::compose(a, b));
}

void BM_ComposeSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_relation(n, 0.05, 1), b = random_relation(n, 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(penrose::serial::compose(a, b));
}

void BM_ClosureParallel(benchmark::State& state) {
  const auto r = random_relation(static_cast<std::size_t>(state.range(0)), 0.002, 3);
  for (auto _ : state) benchmark::DoNotOptimize(penrose::equivalence_closure(r));
}

void BM_ClosureSerial(benchmark::State& state) {
  const auto r = random_relation(static_cast<std::size_t>(state.range(0)), 0.002, 3);
  for (auto _ : state) benchmark::DoNotOptimize(penrose::serial::equivalence_closure(r));
}

void BM_CheckTheoryParallel(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const auto rep = penrose::cantor_rep(l);
  const auto axioms = penrose::instantiate_pent(l);
  for (auto _ : state) benchmark::DoNotOptimize(penrose::check_theory(rep, axioms));
}

void BM_CheckTheorySerial(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const auto rep = penrose::cantor_rep(l);
  const auto axioms = penrose::instantiate_pent(l);
  for (auto _ : state) benchmark::DoNotOptimize(penrose::serial::check_theory(rep, axioms));
}

void BM_InducedParallel(benchmark::State& state) {
  const auto spec = penrose::replicated_sigma(static_cast<std::size_t>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(penrose::induced_from_sigma(spec));
}

void BM_InducedSerial(benchmark::State& state) {
  const auto spec = penrose::replicated_sigma(static_cast<std::size_t>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(penrose::serial::induced_from_sigma(spec));
}

}  // namespace

BENCHMARK(BM_ComposeParallel)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_ComposeSerial)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_ClosureParallel)->Arg(128)->Arg(512);
BENCHMARK(BM_ClosureSerial)->Arg(128)->Arg(512);
BENCHMARK(BM_CheckTheoryParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckTheorySerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InducedParallel)->Arg(6)->Arg(9);
BENCHMARK(BM_InducedSerial)->Arg(6)->Arg(9);

BENCHMARK_MAIN();
