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

#include <cstdint>

#include "sgm/graph.hpp"

namespace sgm {

struct GenConfig {
  std::uint32_t vertex_labels = 5;
  std::uint32_t edge_labels = 3;
  /// Label k is drawn with weight 1 / (k + 1)^zipf.
  double zipf = 1.0;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Same structure as g, fresh single labels drawn from the Zipf
/// distributions of cfg.
Graph assign_labels(const Graph& g, const GenConfig& cfg);

/// n vertices, round(n * mean_degree / 2) distinct uniform random edges,
/// labels from cfg.
Graph random_graph(std::size_t n, double mean_degree, const GenConfig& cfg);

/// Like random_graph, but every vertex gets 1..max_labels distinct labels
/// and every vertex pair 1..max_labels distinct edge labels.
Graph random_multilabel_graph(std::size_t n, double mean_degree, const GenConfig& cfg, unsigned max_labels = 2);

/// Random walk from a random start until n distinct vertices are visited;
/// the visited vertices and traversed edges, labels copied, form the query.
/// Query vertex ids follow visit order. Throws Error after max_retries
/// failed walks.
Graph random_walk_query(const Graph& g, std::size_t n, std::uint64_t seed, std::size_t max_retries = 100);

/// Multi-label query with some vertex and edge labels removed (at least one
/// label always kept), so containment rather than equality is exercised.
Graph drop_labels(const Graph& q, std::uint64_t seed, double drop_probability = 0.5);

}  // namespace sgm
