// SPDX-FileCopyrightText: Copyright (c) 2026 The ToDD-MP Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "todd/metric.h"
#include "todd/persistence.h"
#include "todd/screening.h"
#include "todd/tools/extract.h"
#include "todd/tools/synthetic.h"

namespace {

using namespace todd;

std::vector<MolecularGraph> molecules(int count, int maxAtoms) {
  std::mt19937_64             rng(42);
  std::vector<MolecularGraph> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(tools::randomMolecule(rng, maxAtoms / 2, maxAtoms, "m" + std::to_string(i)));
  }
  return out;
}

//! Full power filtration of one molecule, reduced over GF(2).
void BM_PowerFiltrationReduction(benchmark::State& state) {
  const auto       g = molecules(1, static_cast<int>(state.range(0))).front();
  std::vector<int> all(g.numAtoms());
  std::iota(all.begin(), all.end(), 0);
  const auto fc = vrSlice(all, hopDistances(g), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(persistenceDiagrams(fc));
  }
  state.counters["simplices"] = static_cast<double>(fc.simplices.size());
}
BENCHMARK(BM_PowerFiltrationReduction)->Arg(10)->Arg(20)->Arg(30);

void BM_UnionFindPd0(benchmark::State& state) {
  const auto       g = molecules(1, static_cast<int>(state.range(0))).front();
  std::vector<int> all(g.numAtoms());
  std::iota(all.begin(), all.end(), 0);
  const auto fc = vrSlice(all, hopDistances(g), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pd0UnionFind(fc));
  }
}
BENCHMARK(BM_UnionFindPd0)->Arg(30);

//! One compound through all three modalities with the default Betti spec.
void BM_ExtractCompound(benchmark::State& state) {
  const auto                         graphs = molecules(64, 30);
  std::vector<const MolecularGraph*> ptrs;
  for (const auto& g : graphs) {
    ptrs.push_back(&g);
  }
  tools::RunConfig cfg;
  cfg.modalities  = {Modality::Mass, Modality::Charge, Modality::Bond};
  const auto plan = tools::planExtraction(ptrs, cfg);
  size_t     i    = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tools::extractCompound(graphs[i++ % graphs.size()], plan, cfg));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()));
}
BENCHMARK(BM_ExtractCompound);

void BM_Wasserstein(benchmark::State& state) {
  std::mt19937_64              rng(1);
  const int                    n = static_cast<int>(state.range(0));
  std::vector<PersistencePair> a, b;
  for (int i = 0; i < n; ++i) {
    const int x = static_cast<int>(rng() % 8), y = static_cast<int>(rng() % 8);
    a.push_back({x, x + 1 + static_cast<int>(rng() % 4), false});
    b.push_back({y, y + 1 + static_cast<int>(rng() % 4), false});
  }
  const PersistenceDiagram da(0, 12, a), db(0, 12, b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wasserstein(da, db, 2.0));
  }
}
BENCHMARK(BM_Wasserstein)->Arg(8)->Arg(32)->Arg(128);

void BM_TemplateRanking(benchmark::State& state) {
  std::mt19937_64                  rng(3);
  std::normal_distribution<double> normal;
  std::vector<Embedding>           templates, pool;
  for (int i = 0; i < 3; ++i) {
    templates.push_back({"t" + std::to_string(i), Label::templ("T"), std::vector<double>(768)});
  }
  for (int i = 0; i < 1000; ++i) {
    pool.push_back({"p" + std::to_string(i), Label::decoy(), std::vector<double>(768)});
  }
  for (auto* set : {&templates, &pool}) {
    for (auto& e : *set) {
      for (double& v : e.values) {
        v = normal(rng);
      }
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(rankByTemplates(templates, pool, "T"));
  }
}
BENCHMARK(BM_TemplateRanking);

}  // namespace
BENCHMARK_MAIN();
