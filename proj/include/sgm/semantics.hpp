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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sgm/engine.hpp"
#include "sgm/graph.hpp"
#include "sgm/match_set.hpp"

namespace sgm {

enum class MatchMode { Isomorphism, Homomorphism, EdgeIsomorphism };

/// "iso", "hom" or "edge-iso".
MatchMode parse_mode(std::string_view s);
std::string to_string(MatchMode m);

/// Line-graph vertex i is edge i of the source graph's edges().
struct LineGraphMap {
  std::vector<EdgeRecord> edges;

  const EdgeRecord& edge(VertexId line_vertex) const { return edges[line_vertex]; }
};

struct LineGraph {
  Graph graph;
  LineGraphMap map;
};

inline constexpr std::size_t kDefaultLineGraphEdgeCap = std::size_t{1} << 28;

/// L(G): one vertex per edge, labelled with the edge label; two vertices are
/// adjacent iff their edges share an endpoint, and that edge is labelled
/// with the shared endpoint's vertex label. Throws CapacityError if L(G)
/// would have more than max_edges edges, Error on multi-label input.
LineGraph line_graph_transform(const Graph& g, std::size_t max_edges = kDefaultLineGraphEdgeCap);

/// Rebuilds a multi-label graph as parallel single-label edge triples. Graph
/// already stores one adjacency entry per edge label, so the result is
/// structurally identical; it exists to make the expansion explicit.
Graph expand_multilabel(const Graph& g);

struct ModeStats {
  MatchStats engine;
  /// Rows removed because two query edges without a shared endpoint were
  /// mapped to data edges that share one.
  std::size_t rejected_rows = 0;
  /// Rows that collapsed onto an identical row after the reverse mapping.
  std::size_t collapsed_duplicates = 0;
};

/// Data-side state for one matching mode: the index over G, or over L(G)
/// in edge-isomorphism mode.
class ModeMatcher {
 public:
  ModeMatcher(const Graph& g, MatchMode mode, const IndexOptions& io = {},
              std::size_t line_graph_cap = kDefaultLineGraphEdgeCap);
  ModeMatcher(const ModeMatcher&) = delete;
  ModeMatcher& operator=(const ModeMatcher&) = delete;

  MatchMode mode() const { return mode_; }
  const Graph& data() const { return g_; }
  const DataIndex& index() const { return index_; }
  /// Non-null in edge-isomorphism mode.
  const LineGraph* line_graph() const { return line_.get(); }

  /// Isomorphism and homomorphism rows hold data vertices per query vertex.
  /// Edge-isomorphism rows hold data edge ids (positions in data().edges())
  /// per query edge (positions in q.edges()).
  MatchSet match(const Graph& q, const JoinOptions& opts = {}, ModeStats* stats = nullptr) const;

 private:
  const Graph& g_;
  MatchMode mode_;
  std::unique_ptr<LineGraph> line_;
  DataIndex index_;
};

MatchSet match_with_mode(const Graph& q, const Graph& g, MatchMode mode, const JoinOptions& opts = {},
                         ModeStats* stats = nullptr);

}  // namespace sgm
