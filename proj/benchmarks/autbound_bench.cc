// Copyright 2026 The autbound Authors
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

#include <benchmark/benchmark.h>

#include "autbound/aut.h"
#include "autbound/bounds.h"
#include "autbound/catalog.h"
#include "autbound/verify.h"

namespace {

using autbound::StandardKind;

autbound::GroupPtr ElementaryTwo(benchmark::State& state) {
  return autbound::StandardGroup(
      StandardKind::ElementaryAbelian(2, static_cast<std::size_t>(state.range(0))));
}

void BM_CountAutomorphismsBoolean(benchmark::State& state) {
  const auto g = ElementaryTwo(state);
  for (auto _ : state) benchmark::DoNotOptimize(autbound::CountAutomorphisms(g).order);
}
BENCHMARK(BM_CountAutomorphismsBoolean)->DenseRange(2, 6);

void BM_EnumerateAutomorphismsBoolean(benchmark::State& state) {
  const auto g = ElementaryTwo(state);
  for (auto _ : state) benchmark::DoNotOptimize(autbound::AutomorphismGroup(g).order);
}
BENCHMARK(BM_EnumerateAutomorphismsBoolean)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MinGeneratingSizeDihedral(benchmark::State& state) {
  const auto g = autbound::StandardGroup(
      StandardKind::Dihedral(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(autbound::MinGeneratingSize(g));
}
BENCHMARK(BM_MinGeneratingSizeDihedral)->RangeMultiplier(2)->Range(4, 32);

void BM_FindIsomorphismProducts(benchmark::State& state) {
  const auto a = autbound::StandardGroup(
      StandardKind::Product(StandardKind::Cyclic(2), StandardKind::Symmetric(4)));
  const auto b = autbound::StandardGroup(
      StandardKind::Product(StandardKind::Symmetric(4), StandardKind::Cyclic(2)));
  for (auto _ : state) benchmark::DoNotOptimize(autbound::FindIsomorphism(a, b));
}
BENCHMARK(BM_FindIsomorphismProducts);

void BM_FinitenessWitness(benchmark::State& state) {
  const auto g = autbound::StandardGroup(
      StandardKind::Product(StandardKind::Cyclic(3), StandardKind::Alternating(4)));
  const auto aut = autbound::CountAutomorphisms(g);
  for (auto _ : state) benchmark::DoNotOptimize(autbound::MakeTheoremAWitness(g, aut));
}
BENCHMARK(BM_FinitenessWitness);

void BM_VerifyBundledCorpus(benchmark::State& state) {
  const auto corpus = autbound::BundledCorpus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(autbound::VerifySuite(corpus, autbound::AllSuites()).rows.size());
  }
}
BENCHMARK(BM_VerifyBundledCorpus)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
