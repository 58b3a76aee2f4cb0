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

#include "sgm/engine.hpp"

#include <ostream>

namespace sgm {

DataIndex DataIndex::build(const Graph& g, const IndexOptions& opts) {
  opts.signature.validate();
  DataIndex idx;
  idx.g_ = &g;
  idx.signatures_ = SignatureTable::build(g, opts.signature, opts.threads);
  idx.pcsrs_ = PcsrSet::build(g, opts.gpn, opts.signature.seed);
  idx.frequency_ = label_frequency(g);
  return idx;
}

std::vector<CandidateSet> engine_candidates(const Graph& q, const DataIndex& index, int threads) {
  const Graph& g = index.graph();
  auto cands = filter_candidates(q, index.signatures(), g, threads);
  if (g.multi_label())
    for (auto& c : cands) c = refine_multilabel(c, q, g);
  return cands;
}

MatchSet match(const Graph& q, const DataIndex& index, const JoinOptions& opts, MatchStats* stats) {
  const std::size_t n = q.num_vertices();
  if (n == 0) throw Error("empty query");
  if (!is_connected(q)) throw Error("query graph must be connected");

  MatchStats local;
  MatchStats& st = stats ? *stats : local;
  st = MatchStats{};

  const auto cands = engine_candidates(q, index, opts.threads);
  for (const auto& c : cands) st.candidate_sizes.push_back(c.size());

  const JoinPlan plan = plan_join_order(q, cands, index.frequency());
  st.order = plan.order;

  const auto& first = cands[plan.order.front()].members();
  IntermediateTable m({plan.order.front()}, std::vector<VertexId>(first.begin(), first.end()));
  st.table_sizes.push_back(m.rows());

  for (const auto& step : plan.steps) {
    if (m.empty()) break;
    JoinStepStats js;
    m = join_step(m, step, cands[step.vertex], index.pcsrs(), opts, &js);
    st.steps.push_back(js);
    st.table_sizes.push_back(m.rows());
  }

  if (m.empty() || m.width() != n) return MatchSet(n);

  std::vector<std::size_t> col(n);
  for (VertexId u = 0; u < n; ++u) col[u] = m.column_of(u);
  std::vector<VertexId> cells(m.rows() * n);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    for (VertexId u = 0; u < n; ++u) cells[i * n + u] = r[col[u]];
  }
  MatchSet out(n, std::move(cells));
  out.canonicalize();
  return out;
}

}  // namespace sgm
