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

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sgm/graph.hpp"
#include "sgm/join.hpp"
#include "sgm/signature.hpp"

namespace sgm::testing {

// Worked example: vertex labels A=0, B=1, C=2; edge labels a=0, b=1.
inline constexpr LabelId kA = 0, kB = 1, kC = 2;
inline constexpr LabelId kEdgeA = 0, kEdgeB = 1;

/// v0 (A); v1..v100 (B); v101..v201 (C), v199 isolated.
/// a-edges: v0-vj (j=1..100), vj-v(j+99) (j=2..99), v100-v200, v100-v201.
/// b-edges: v0-v201, v1-v101.
inline Graph example_data_graph() {
  GraphBuilder b;
  b.add_vertex(kA);
  for (int j = 1; j <= 100; ++j) b.add_vertex(kB);
  for (int j = 101; j <= 201; ++j) b.add_vertex(kC);
  for (VertexId j = 1; j <= 100; ++j) b.add_edge(0, j, kEdgeA);
  for (VertexId j = 2; j <= 99; ++j) b.add_edge(j, j + 99, kEdgeA);
  b.add_edge(100, 200, kEdgeA);
  b.add_edge(100, 201, kEdgeA);
  b.add_edge(0, 201, kEdgeB);
  b.add_edge(1, 101, kEdgeB);
  return std::move(b).build();
}

/// u0 (A), u1 (B), u2 (C), u3 (C); u0-u1 a, u1-u2 a, u0-u2 b, u1-u3 a.
inline Graph example_query() {
  GraphBuilder b;
  b.add_vertex(kA);
  b.add_vertex(kB);
  b.add_vertex(kC);
  b.add_vertex(kC);
  b.add_edge(0, 1, kEdgeA);
  b.add_edge(1, 2, kEdgeA);
  b.add_edge(0, 2, kEdgeB);
  b.add_edge(1, 3, kEdgeA);
  return std::move(b).build();
}

inline std::vector<VertexId> id_range(VertexId lo, VertexId hi) {
  std::vector<VertexId> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

/// Candidate sets as listed for the worked example: C(u0)={v0},
/// C(u1)={v1..v100}, C(u2)=C(u3)={v101..v201}.
inline std::vector<CandidateSet> example_candidates(std::size_t n_data = 202) {
  return {CandidateSet(0, {0}, n_data), CandidateSet(1, id_range(1, 100), n_data),
          CandidateSet(2, id_range(101, 201), n_data), CandidateSet(3, id_range(101, 201), n_data)};
}

/// M for Q' = (u0, u1): rows (v0, vj), j = 1..100.
inline IntermediateTable example_table() {
  std::vector<VertexId> cells;
  for (VertexId j = 1; j <= 100; ++j) {
    cells.push_back(0);
    cells.push_back(j);
  }
  return IntermediateTable({0, 1}, std::move(cells));
}

inline Graph triangle(LabelId vl = 0, LabelId el = 0) {
  GraphBuilder b;
  for (int i = 0; i < 3; ++i) b.add_vertex(vl);
  b.add_edge(0, 1, el);
  b.add_edge(1, 2, el);
  b.add_edge(0, 2, el);
  return std::move(b).build();
}

/// Label-only candidates: every data vertex whose labels contain u's.
inline std::vector<VertexId> label_only(const Graph& q, VertexId u, const Graph& g) {
  std::vector<VertexId> out;
  const auto ql = q.labels(u);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto dl = g.labels(v);
    if (std::includes(dl.begin(), dl.end(), ql.begin(), ql.end())) out.push_back(v);
  }
  return out;
}

/// Label-and-degree baseline filter.
inline std::vector<VertexId> label_and_degree(const Graph& q, VertexId u, const Graph& g) {
  std::vector<VertexId> out;
  for (auto v : label_only(q, u, g))
    if (g.degree(v) >= q.degree(u)) out.push_back(v);
  return out;
}

/// Random P(G, l) over n vertices with ids spread over [0, 4n).
inline PartitionedGraph random_partition(std::size_t n, double mean_degree, std::uint64_t seed, LabelId l = 0) {
  std::mt19937_64 rng(seed);
  std::vector<VertexId> pool(4 * n);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  const auto m = static_cast<std::size_t>(static_cast<double>(n) * mean_degree / 2);
  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto a = pool[idx(rng)], b = pool[idx(rng)];
    if (a == b) continue;
    arcs.emplace_back(a, b);
    arcs.emplace_back(b, a);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  PartitionedGraph d;
  d.edge_label = l;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i == 0 || arcs[i].first != arcs[i - 1].first) {
      if (i) d.offsets.push_back(d.neighbors.size());
      d.vertices.push_back(arcs[i].first);
    }
    d.neighbors.push_back(arcs[i].second);
  }
  if (!arcs.empty()) d.offsets.push_back(d.neighbors.size());
  return d;
}

}  // namespace sgm::testing
