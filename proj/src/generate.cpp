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

#include "sgm/generate.hpp"

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>

namespace sgm {

namespace {

std::discrete_distribution<LabelId> zipf_distribution(std::uint32_t k, double s) {
  std::vector<double> w(k);
  for (std::uint32_t i = 0; i < k; ++i) w[i] = 1.0 / std::pow(static_cast<double>(i) + 1.0, s);
  return std::discrete_distribution<LabelId>(w.begin(), w.end());
}

std::vector<std::pair<VertexId, VertexId>> random_pairs(std::size_t n, double mean_degree, std::mt19937_64& rng) {
  if (n < 2) return {};
  const std::size_t max_edges = n * (n - 1) / 2;
  const auto m = std::min(max_edges, static_cast<std::size_t>(std::llround(static_cast<double>(n) * mean_degree / 2)));
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<std::pair<VertexId, VertexId>> out;
  while (out.size() < m) {
    VertexId a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (seen.insert({a, b}).second) out.emplace_back(a, b);
  }
  return out;
}

std::vector<LabelId> distinct_labels(std::discrete_distribution<LabelId>& dist, std::mt19937_64& rng,
                                     unsigned max_labels, std::uint32_t domain) {
  std::uniform_int_distribution<unsigned> how_many(1, std::max(1U, std::min<unsigned>(max_labels, domain)));
  const unsigned k = how_many(rng);
  std::set<LabelId> ls;
  while (ls.size() < k) ls.insert(dist(rng));
  return {ls.begin(), ls.end()};
}

}  // namespace

void GenConfig::validate() const {
  if (vertex_labels == 0 || edge_labels == 0) throw Error("label domains must be non-empty");
  if (!(zipf >= 0)) throw Error("zipf exponent must be non-negative");
}

Graph assign_labels(const Graph& g, const GenConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  auto vdist = zipf_distribution(cfg.vertex_labels, cfg.zipf);
  auto edist = zipf_distribution(cfg.edge_labels, cfg.zipf);
  GraphBuilder b;
  for (VertexId v = 0; v < g.num_vertices(); ++v) b.add_vertex({vdist(rng)}, g.external_id(v));
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : g.edges())
    if (seen.insert({e.src, e.dst}).second) b.add_edge(e.src, e.dst, edist(rng));
  return std::move(b).build();
}

Graph random_graph(std::size_t n, double mean_degree, const GenConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  auto vdist = zipf_distribution(cfg.vertex_labels, cfg.zipf);
  auto edist = zipf_distribution(cfg.edge_labels, cfg.zipf);
  GraphBuilder b;
  for (std::size_t v = 0; v < n; ++v) b.add_vertex(vdist(rng));
  for (auto [a, c] : random_pairs(n, mean_degree, rng)) b.add_edge(a, c, edist(rng));
  return std::move(b).build();
}

Graph random_multilabel_graph(std::size_t n, double mean_degree, const GenConfig& cfg, unsigned max_labels) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  auto vdist = zipf_distribution(cfg.vertex_labels, cfg.zipf);
  auto edist = zipf_distribution(cfg.edge_labels, cfg.zipf);
  GraphBuilder b(true);
  for (std::size_t v = 0; v < n; ++v) b.add_vertex(distinct_labels(vdist, rng, max_labels, cfg.vertex_labels));
  for (auto [a, c] : random_pairs(n, mean_degree, rng))
    for (auto l : distinct_labels(edist, rng, max_labels, cfg.edge_labels)) b.add_edge(a, c, l);
  return std::move(b).build();
}

Graph random_walk_query(const Graph& g, std::size_t n, std::uint64_t seed, std::size_t max_retries) {
  if (n == 0) throw Error("query size must be positive");
  if (g.num_vertices() == 0) throw Error("cannot walk an empty graph");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.num_vertices() - 1));
  const std::size_t max_steps = 20 * n + 100;

  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    VertexId cur = pick(rng);
    if (n > 1 && g.degree(cur) == 0) continue;
    std::map<VertexId, VertexId> qid{{cur, 0}};
    std::vector<VertexId> visit{cur};
    std::set<std::tuple<VertexId, VertexId, LabelId>> edges;
    for (std::size_t step = 0; qid.size() < n && step < max_steps; ++step) {
      auto adj = g.neighbors(cur);
      std::uniform_int_distribution<std::size_t> choose(0, adj.size() - 1);
      const AdjEntry e = adj[choose(rng)];
      if (qid.emplace(e.neighbor, static_cast<VertexId>(visit.size())).second) visit.push_back(e.neighbor);
      VertexId a = qid[cur], c = qid[e.neighbor];
      if (a > c) std::swap(a, c);
      edges.insert({a, c, e.label});
      cur = e.neighbor;
    }
    if (qid.size() < n) continue;

    GraphBuilder b(g.multi_label());
    for (auto v : visit) {
      auto ls = g.labels(v);
      b.add_vertex(std::vector<LabelId>(ls.begin(), ls.end()));
    }
    for (auto [a, c, l] : edges) b.add_edge(a, c, l);
    return std::move(b).build();
  }
  throw Error("random walk failed to visit " + std::to_string(n) + " vertices after " + std::to_string(max_retries) +
              " attempts");
}

Graph drop_labels(const Graph& q, std::uint64_t seed, double drop_probability) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution drop(drop_probability);
  auto keep_some = [&](std::vector<LabelId> ls) {
    std::vector<LabelId> kept;
    for (auto l : ls)
      if (!drop(rng)) kept.push_back(l);
    if (kept.empty()) kept.push_back(ls[std::uniform_int_distribution<std::size_t>(0, ls.size() - 1)(rng)]);
    return kept;
  };
  GraphBuilder b(true);
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    auto ls = q.labels(v);
    b.add_vertex(keep_some({ls.begin(), ls.end()}), q.external_id(v));
  }
  std::map<std::pair<VertexId, VertexId>, std::vector<LabelId>> pairs;
  for (const auto& e : q.edges()) pairs[{e.src, e.dst}].push_back(e.label);
  for (const auto& [p, ls] : pairs)
    for (auto l : keep_some(ls)) b.add_edge(p.first, p.second, l);
  return std::move(b).build();
}

}  // namespace sgm
