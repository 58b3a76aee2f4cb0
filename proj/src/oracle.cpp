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

#include "sgm/oracle.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace sgm {

namespace {

bool labels_contained(std::span<const LabelId> sub, std::span<const LabelId> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

class VertexSearch {
 public:
  VertexSearch(const Graph& q, const Graph& g, bool injective)
      : q_(q), g_(g), injective_(injective), map_(q.num_vertices(), kNoVertex), used_(g.num_vertices(), 0),
        out_(q.num_vertices()) {}

  MatchSet run() {
    if (q_.num_vertices() > 0) extend(0);
    out_.canonicalize();
    return std::move(out_);
  }

 private:
  bool feasible(VertexId u, VertexId v) const {
    if (injective_ && used_[v]) return false;
    if (!labels_contained(q_.labels(u), g_.labels(v))) return false;
    if (injective_ && g_.degree(v) < q_.degree(u)) return false;
    for (const auto& e : q_.neighbors(u))
      if (e.neighbor < u && !g_.has_edge(v, map_[e.neighbor], e.label)) return false;
    return true;
  }

  void extend(VertexId u) {
    if (u == q_.num_vertices()) {
      out_.push_row(map_);
      return;
    }
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (!feasible(u, v)) continue;
      map_[u] = v;
      used_[v] = 1;
      extend(u + 1);
      used_[v] = 0;
      map_[u] = kNoVertex;
    }
  }

  const Graph& q_;
  const Graph& g_;
  bool injective_;
  std::vector<VertexId> map_;
  std::vector<char> used_;
  MatchSet out_;
};

std::optional<VertexId> shared_endpoint(const EdgeRecord& a, const EdgeRecord& b) {
  if (a.src == b.src || a.src == b.dst) return a.src;
  if (a.dst == b.src || a.dst == b.dst) return a.dst;
  return std::nullopt;
}

/// Injective maps E(q) -> E(g) with equal edge labels such that two query
/// edges share an endpoint iff their images do, and shared endpoints carry
/// equal vertex labels.
class EdgeSearch {
 public:
  EdgeSearch(const Graph& q, const Graph& g)
      : q_(q), g_(g), qe_(q.edges()), ge_(g.edges()), map_(qe_.size()), used_(ge_.size(), 0), out_(qe_.size()) {}

  MatchSet run() {
    if (!qe_.empty()) extend(0);
    out_.canonicalize();
    return std::move(out_);
  }

 private:
  bool feasible(std::size_t j, VertexId x) const {
    if (used_[x] || ge_[x].label != qe_[j].label) return false;
    for (std::size_t k = 0; k < j; ++k) {
      const auto qs = shared_endpoint(qe_[j], qe_[k]);
      const auto gs = shared_endpoint(ge_[x], ge_[map_[k]]);
      if (qs.has_value() != gs.has_value()) return false;
      if (qs && q_.label(*qs) != g_.label(*gs)) return false;
    }
    return true;
  }

  void extend(std::size_t j) {
    if (j == qe_.size()) {
      out_.push_row(map_);
      return;
    }
    for (VertexId x = 0; x < ge_.size(); ++x) {
      if (!feasible(j, x)) continue;
      map_[j] = x;
      used_[x] = 1;
      extend(j + 1);
      used_[x] = 0;
    }
  }

  const Graph& q_;
  const Graph& g_;
  std::vector<EdgeRecord> qe_;
  std::vector<EdgeRecord> ge_;
  std::vector<VertexId> map_;
  std::vector<char> used_;
  MatchSet out_;
};

}  // namespace

MatchSet backtracking_match(const Graph& q, const Graph& g, MatchMode mode, const OracleLimits& limits) {
  if (q.num_vertices() > limits.max_query_vertices)
    throw Error("oracle refuses query with " + std::to_string(q.num_vertices()) + " vertices (limit " +
                std::to_string(limits.max_query_vertices) + ")");
  if (q.num_edges() > limits.max_query_edges)
    throw Error("oracle refuses query with " + std::to_string(q.num_edges()) + " edges (limit " +
                std::to_string(limits.max_query_edges) + ")");
  if (g.num_vertices() > limits.max_data_vertices)
    throw Error("oracle refuses data graph with " + std::to_string(g.num_vertices()) + " vertices (limit " +
                std::to_string(limits.max_data_vertices) + ")");
  switch (mode) {
    case MatchMode::Isomorphism: return VertexSearch(q, g, true).run();
    case MatchMode::Homomorphism: return VertexSearch(q, g, false).run();
    case MatchMode::EdgeIsomorphism:
      if (q.multi_label() || g.multi_label()) throw Error("edge isomorphism needs single-label graphs");
      return EdgeSearch(q, g).run();
  }
  return {};
}

}  // namespace sgm
