// Copyright 2026 The sgm Authors
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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "sgm/engine.hpp"
#include "sgm/generate.hpp"

namespace sgm {
namespace {

struct Workload {
  Graph g;
  DataIndex index;
  Graph q;
  std::vector<CandidateSet> cands;
  JoinPlan plan;
  IntermediateTable m1;

  Workload() : g(make_graph()), index(DataIndex::build(g)), q(random_walk_query(g, 4, 1)) {
    cands = engine_candidates(q, index);
    plan = plan_join_order(q, cands, index.frequency());
    const auto first = cands[plan.order[0]].members();
    IntermediateTable m0({plan.order[0]}, {first.begin(), first.end()});
    m1 = join_step_serial(m0, plan.steps[0], cands[plan.order[1]], index.pcsrs());
  }

  static Graph make_graph() {
    GenConfig cfg;
    cfg.vertex_labels = 2;
    cfg.edge_labels = 2;
    cfg.seed = 11;
    return random_graph(20000, 16, cfg);
  }
};

const Workload& workload() {
  static const Workload w;
  return w;
}

void BM_JoinStep(benchmark::State& state) {
  const auto& w = workload();
  JoinOptions o;
  o.threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(join_step(w.m1, w.plan.steps[1], w.cands[w.plan.order[2]], w.index.pcsrs(), o));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.m1.rows()));
}
BENCHMARK(BM_JoinStep)->Arg(1)->Arg(4);

void BM_JoinStepSerial(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state)
    benchmark::DoNotOptimize(join_step_serial(w.m1, w.plan.steps[1], w.cands[w.plan.order[2]], w.index.pcsrs()));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.m1.rows()));
}
BENCHMARK(BM_JoinStepSerial);

void BM_FilterCandidates(benchmark::State& state) {
  const auto& w = workload();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(filter_candidates(w.q, w.index.signatures(), w.g, threads));
}
BENCHMARK(BM_FilterCandidates)->Arg(1)->Arg(4);

void BM_FilterCandidatesSerial(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state) benchmark::DoNotOptimize(filter_candidates_serial(w.q, w.index.signatures(), w.g));
}
BENCHMARK(BM_FilterCandidatesSerial);

std::vector<std::size_t> random_sizes(std::size_t n) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> d(0, 64);
  std::vector<std::size_t> xs(n);
  for (auto& x : xs) x = d(rng);
  return xs;
}

void BM_PrefixSum(benchmark::State& state) {
  const auto xs = random_sizes(1 << 20);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exclusive_prefix_sum(xs, threads));
}
BENCHMARK(BM_PrefixSum)->Arg(1)->Arg(4);

void BM_PrefixSumSerial(benchmark::State& state) {
  const auto xs = random_sizes(1 << 20);
  for (auto _ : state) benchmark::DoNotOptimize(exclusive_prefix_sum_serial(xs));
}
BENCHMARK(BM_PrefixSumSerial);

std::vector<std::pair<VertexId, LabelId>> lookups(const Graph& g) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.num_vertices() - 1));
  std::vector<std::pair<VertexId, LabelId>> out;
  while (out.size() < 4096) {
    const VertexId v = pick(rng);
    const auto adj = g.neighbors(v);
    if (!adj.empty()) out.emplace_back(v, adj[rng() % adj.size()].label);
  }
  return out;
}

void BM_PcsrLookup(benchmark::State& state) {
  const auto& w = workload();
  const auto qs = lookups(w.g);
  for (auto _ : state)
    for (auto [v, l] : qs) benchmark::DoNotOptimize(w.index.pcsrs()[l].neighbors(v));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(qs.size()));
}
BENCHMARK(BM_PcsrLookup);

void BM_BaselineLookup(benchmark::State& state) {
  const auto& w = workload();
  const auto kind = static_cast<BaselineKind>(state.range(0));
  const auto idx = BaselineIndex::build(w.g, kind);
  const auto qs = lookups(w.g);
  std::vector<VertexId> out;
  for (auto _ : state)
    for (auto [v, l] : qs) {
      idx.neighbors(v, l, out);
      benchmark::DoNotOptimize(out.data());
    }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(qs.size()));
}
BENCHMARK(BM_BaselineLookup)
    ->Arg(static_cast<int>(BaselineKind::CsrFullScan))
    ->Arg(static_cast<int>(BaselineKind::Basic))
    ->Arg(static_cast<int>(BaselineKind::Compressed));

}  // namespace
}  // namespace sgm

BENCHMARK_MAIN();
