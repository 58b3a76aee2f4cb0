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

#include "sgm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace sgm {

std::span<const AdjEntry> Graph::neighbors(VertexId v, LabelId l) const {
  auto all = neighbors(v);
  auto lo = std::lower_bound(all.begin(), all.end(), AdjEntry{0, l});
  auto hi = std::lower_bound(lo, all.end(), AdjEntry{0, l + 1});
  if (l == std::numeric_limits<LabelId>::max()) hi = all.end();
  return {lo, hi};
}

bool Graph::has_edge(VertexId v, VertexId w, LabelId l) const {
  auto all = neighbors(v);
  return std::binary_search(all.begin(), all.end(), AdjEntry{w, l});
}

bool Graph::adjacent(VertexId v, VertexId w) const {
  for (const auto& e : neighbors(v))
    if (e.neighbor == w) return true;
  return false;
}

std::vector<EdgeRecord> Graph::edges() const {
  std::vector<EdgeRecord> out;
  out.reserve(num_edges());
  for (VertexId v = 0; v < num_vertices(); ++v)
    for (const auto& e : neighbors(v))
      if (v < e.neighbor) out.push_back({v, e.neighbor, e.label});
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::same_structure(const Graph& other) const {
  return vertex_label_offsets_ == other.vertex_label_offsets_ && vertex_labels_ == other.vertex_labels_ &&
         offsets_ == other.offsets_ && adjacency_ == other.adjacency_ && multi_label_ == other.multi_label_;
}

VertexId GraphBuilder::add_vertex(std::vector<LabelId> labels, std::optional<std::int64_t> external_id) {
  if (labels_.size() >= kNoVertex) throw Error("too many vertices");
  auto id = static_cast<VertexId>(labels_.size());
  labels_.push_back(std::move(labels));
  external_ids_.push_back(external_id.value_or(id));
  return id;
}

void GraphBuilder::add_edge(VertexId a, VertexId b, LabelId label) {
  if (a > b) std::swap(a, b);
  edges_.push_back({a, b, label});
}

Graph GraphBuilder::build() && {
  Graph g;
  g.multi_label_ = multi_label_;
  const std::size_t n = labels_.size();

  g.vertex_label_offsets_.reserve(n + 1);
  g.vertex_label_offsets_.push_back(0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& ls = labels_[v];
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    if (ls.empty()) throw Error("vertex " + std::to_string(external_ids_[v]) + " has no label");
    if (!multi_label_ && ls.size() > 1)
      throw Error("vertex " + std::to_string(external_ids_[v]) + " has several labels (single-label mode)");
    for (auto l : ls) g.num_vertex_labels_ = std::max(g.num_vertex_labels_, l + 1);
    g.vertex_labels_.insert(g.vertex_labels_.end(), ls.begin(), ls.end());
    g.vertex_label_offsets_.push_back(g.vertex_labels_.size());
  }

  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.dst >= n) throw Error("unknown vertex " + std::to_string(e.dst));
    if (e.src == e.dst) throw Error("self-loop at vertex " + std::to_string(external_ids_[e.src]));
    if (i > 0) {
      const auto& p = edges_[i - 1];
      if (p == e)
        throw Error("duplicate edge " + std::to_string(external_ids_[e.src]) + " " +
                    std::to_string(external_ids_[e.dst]));
      if (!multi_label_ && p.src == e.src && p.dst == e.dst)
        throw Error("parallel edges between " + std::to_string(external_ids_[e.src]) + " and " +
                    std::to_string(external_ids_[e.dst]) + " (single-label mode)");
    }
    g.num_edge_labels_ = std::max(g.num_edge_labels_, e.label + 1);
  }

  std::vector<std::size_t> degree(n + 1, 0);
  for (const auto& e : edges_) {
    ++degree[e.src];
    ++degree[e.dst];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : edges_) {
    g.adjacency_[fill[e.src]++] = {e.dst, e.label};
    g.adjacency_[fill[e.dst]++] = {e.src, e.label};
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  g.external_ids_ = std::move(external_ids_);
  return g;
}

PartitionedGraph partition_by_edge_label(const Graph& g, LabelId l) {
  PartitionedGraph d;
  d.edge_label = l;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto run = g.neighbors(v, l);
    if (run.empty()) continue;
    d.vertices.push_back(v);
    for (const auto& e : run) d.neighbors.push_back(e.neighbor);
    d.offsets.push_back(d.neighbors.size());
  }
  return d;
}

LabelFrequency label_frequency(const Graph& g) {
  LabelFrequency f;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (const auto& e : g.neighbors(v))
      if (v < e.neighbor) ++f[e.label];
  return f;
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::int64_t parse_int(std::istringstream& ss, std::size_t line, const char* what) {
  std::int64_t x;
  if (!(ss >> x)) fail(line, std::string("expected ") + what);
  return x;
}

std::vector<LabelId> parse_labels(std::istringstream& ss, std::size_t line) {
  std::vector<LabelId> out;
  std::int64_t x;
  while (ss >> x) {
    if (x < 0 || x >= std::numeric_limits<LabelId>::max()) fail(line, "label out of range");
    out.push_back(static_cast<LabelId>(x));
  }
  if (!ss.eof()) fail(line, "malformed label");
  if (out.empty()) fail(line, "missing label");
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in, bool multi_label) {
  GraphBuilder builder(multi_label);
  std::unordered_map<std::int64_t, VertexId> ids;
  std::optional<std::pair<std::int64_t, std::int64_t>> header;
  std::size_t edge_lines = 0;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "t") {
      if (header) fail(line, "duplicate header");
      auto nv = parse_int(ss, line, "vertex count");
      auto ne = parse_int(ss, line, "edge count");
      if (nv < 0 || ne < 0) fail(line, "negative count");
      header.emplace(nv, ne);
    } else if (!header) {
      fail(line, "expected 't <|V|> <|E|>' header");
    } else if (tag == "v") {
      auto ext = parse_int(ss, line, "vertex id");
      auto labels = parse_labels(ss, line);
      if (!multi_label && labels.size() > 1) fail(line, "multiple vertex labels need multi-label mode");
      if (ids.count(ext)) fail(line, "duplicate vertex " + std::to_string(ext));
      ids.emplace(ext, builder.add_vertex(std::move(labels), ext));
    } else if (tag == "e") {
      auto src = parse_int(ss, line, "source id");
      auto dst = parse_int(ss, line, "destination id");
      auto labels = parse_labels(ss, line);
      if (!multi_label && labels.size() > 1) fail(line, "multiple edge labels need multi-label mode");
      auto a = ids.find(src);
      if (a == ids.end()) fail(line, "unknown vertex " + std::to_string(src));
      auto b = ids.find(dst);
      if (b == ids.end()) fail(line, "unknown vertex " + std::to_string(dst));
      for (auto l : labels) builder.add_edge(a->second, b->second, l);
      ++edge_lines;
    } else {
      fail(line, "unknown record '" + tag + "'");
    }
  }
  if (!header) throw ParseError("line " + std::to_string(line) + ": missing header");
  if (static_cast<std::int64_t>(builder.num_vertices()) != header->first)
    throw ParseError("header declares " + std::to_string(header->first) + " vertices, found " +
                     std::to_string(builder.num_vertices()));
  if (static_cast<std::int64_t>(edge_lines) != header->second)
    throw ParseError("header declares " + std::to_string(header->second) + " edges, found " +
                     std::to_string(edge_lines));
  try {
    return std::move(builder).build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Graph load_graph(const std::filesystem::path& path, bool multi_label) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_graph(in, multi_label);
}

void write_graph(std::ostream& out, const Graph& g) {
  // Group parallel labels of one vertex pair onto a single 'e' line.
  auto edges = g.edges();
  std::vector<std::pair<std::size_t, std::size_t>> lines;
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i + 1;
    while (j < edges.size() && edges[j].src == edges[i].src && edges[j].dst == edges[i].dst) ++j;
    lines.emplace_back(i, j);
    i = j;
  }
  out << "t " << g.num_vertices() << ' ' << lines.size() << '\n';
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "v " << g.external_id(v);
    for (auto l : g.labels(v)) out << ' ' << l;
    out << '\n';
  }
  for (auto [i, j] : lines) {
    out << "e " << g.external_id(edges[i].src) << ' ' << g.external_id(edges[i].dst);
    for (auto k = i; k < j; ++k) out << ' ' << edges[k].label;
    out << '\n';
  }
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_graph(out, g);
}

bool is_connected(const Graph& g) {
  const auto n = g.num_vertices();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& e : g.neighbors(v))
      if (!seen[e.neighbor]) {
        seen[e.neighbor] = 1;
        ++count;
        stack.push_back(e.neighbor);
      }
  }
  return count == n;
}

}  // namespace sgm
