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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sgm/common.hpp"

namespace sgm {

struct AdjEntry {
  VertexId neighbor;
  LabelId label;

  friend bool operator==(const AdjEntry&, const AdjEntry&) = default;
  /// Adjacency order: by edge label, then neighbor id.
  friend bool operator<(const AdjEntry& a, const AdjEntry& b) {
    return a.label != b.label ? a.label < b.label : a.neighbor < b.neighbor;
  }
};

/// One undirected labelled edge with src < dst.
struct EdgeRecord {
  VertexId src;
  VertexId dst;
  LabelId label;

  friend auto operator<=>(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Immutable undirected, vertex- and edge-labelled graph.
///
/// Adjacency is stored CSR-style and each vertex's list is sorted by
/// (edge label, neighbor), so N(v, l) is a contiguous slice. In multi-label
/// mode a vertex may carry several labels and a vertex pair may be joined by
/// several edges with distinct labels; each is a separate adjacency entry.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const { return vertex_label_offsets_.empty() ? 0 : vertex_label_offsets_.size() - 1; }
  /// Number of (v, w, l) edge triples.
  std::size_t num_edges() const { return adjacency_.size() / 2; }
  std::uint32_t num_vertex_labels() const { return num_vertex_labels_; }
  std::uint32_t num_edge_labels() const { return num_edge_labels_; }
  bool multi_label() const { return multi_label_; }

  /// Sorted, duplicate-free label set of v.
  std::span<const LabelId> labels(VertexId v) const {
    return {vertex_labels_.data() + vertex_label_offsets_[v],
            vertex_labels_.data() + vertex_label_offsets_[v + 1]};
  }
  /// First (in single-label mode: the only) label of v.
  LabelId label(VertexId v) const { return vertex_labels_[vertex_label_offsets_[v]]; }

  std::span<const AdjEntry> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  /// The slice of v's adjacency whose edge label is l.
  std::span<const AdjEntry> neighbors(VertexId v, LabelId l) const;
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId v, VertexId w, LabelId l) const;
  bool adjacent(VertexId v, VertexId w) const;

  /// All edge triples with src < dst, sorted.
  std::vector<EdgeRecord> edges() const;

  std::int64_t external_id(VertexId v) const { return external_ids_[v]; }
  std::span<const std::int64_t> external_ids() const { return external_ids_; }

  /// Structural equality (labels and adjacency; external ids ignored).
  bool same_structure(const Graph& other) const;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> vertex_label_offsets_;
  std::vector<LabelId> vertex_labels_;
  std::vector<std::size_t> offsets_;
  std::vector<AdjEntry> adjacency_;
  std::vector<std::int64_t> external_ids_;
  std::uint32_t num_vertex_labels_ = 0;
  std::uint32_t num_edge_labels_ = 0;
  bool multi_label_ = false;
};

/// Accumulates vertices and edges and validates them into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(bool multi_label = false) : multi_label_(multi_label) {}

  /// Returns the dense id of the new vertex. External id defaults to the
  /// dense id.
  VertexId add_vertex(std::vector<LabelId> labels, std::optional<std::int64_t> external_id = std::nullopt);
  VertexId add_vertex(LabelId label) { return add_vertex(std::vector<LabelId>{label}); }
  void add_edge(VertexId a, VertexId b, LabelId label);

  std::size_t num_vertices() const { return labels_.size(); }

  /// Throws Error on self-loops, duplicate triples, out-of-range endpoints,
  /// empty label sets, or (single-label mode) multiple labels per vertex or
  /// per vertex pair.
  Graph build() &&;

 private:
  bool multi_label_;
  std::vector<std::vector<LabelId>> labels_;
  std::vector<std::int64_t> external_ids_;
  std::vector<EdgeRecord> edges_;
};

/// P(G, l): the subgraph induced by all l-labelled edges, labels dropped.
struct PartitionedGraph {
  LabelId edge_label = 0;
  /// Sorted ids of vertices with at least one l-edge.
  std::vector<VertexId> vertices;
  /// offsets[i]..offsets[i+1] delimits neighbors of vertices[i].
  std::vector<std::size_t> offsets{0};
  std::vector<VertexId> neighbors;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_edges() const { return neighbors.size() / 2; }
  std::span<const VertexId> neighbors_of(std::size_t i) const {
    return {neighbors.data() + offsets[i], neighbors.data() + offsets[i + 1]};
  }
};

PartitionedGraph partition_by_edge_label(const Graph& g, LabelId l);

/// freq(l): number of edges carrying label l. Absent labels have no entry.
using LabelFrequency = std::map<LabelId, std::size_t>;

LabelFrequency label_frequency(const Graph& g);

inline std::size_t freq_of(const LabelFrequency& f, LabelId l) {
  auto it = f.find(l);
  return it == f.end() ? 0 : it->second;
}

/// Text format:
///   t <|V|> <|E|>
///   v <id> <label> [<label> ...]
///   e <src> <dst> <label> [<label> ...]
/// '#' starts a comment. Multiple labels are accepted only in multi-label
/// mode. External ids are remapped to dense ids in declaration order.
Graph parse_graph(std::istream& in, bool multi_label = false);
Graph load_graph(const std::filesystem::path& path, bool multi_label = false);
void write_graph(std::ostream& out, const Graph& g);
void save_graph(const std::filesystem::path& path, const Graph& g);

bool is_connected(const Graph& g);

}  // namespace sgm
