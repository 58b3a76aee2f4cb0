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

#include "sgm/signature.hpp"

#include <omp.h>

#include <algorithm>
#include <optional>

namespace sgm {

namespace {

constexpr std::uint64_t kLabelSalt = 0xa0761d6478bd642fULL;

/// Mask of label-field bits [0, K) falling into word w.
std::uint64_t field_mask(unsigned k_bits, unsigned w) {
  const unsigned lo = w * 64;
  if (k_bits <= lo) return 0;
  if (k_bits >= lo + 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (k_bits - lo)) - 1;
}

unsigned field_words(unsigned k_bits) { return (k_bits + 63) / 64; }

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

void SignatureParams::validate() const {
  if (n_bits <= k_bits) throw Error("signature width N must exceed label width K");
  if ((n_bits - k_bits) % 2 != 0) throw Error("N - K must be even");
  if (k_bits == 0) throw Error("label width K must be positive");
}

LabelEncoding choose_label_encoding(const Graph& g, const SignatureParams& p) {
  if (g.multi_label()) return LabelEncoding::Hashed;
  if (p.k_bits >= 32 || g.num_vertex_labels() <= (std::uint64_t{1} << p.k_bits)) return LabelEncoding::Direct;
  return LabelEncoding::Hashed;
}

unsigned pair_group(LabelId edge_label, LabelId neighbor_label, const SignatureParams& p) {
  const std::uint64_t key = mix64(std::uint64_t{edge_label} << 32 | neighbor_label, p.seed);
  return static_cast<unsigned>(key % p.group_count());
}

Signature encode_vertex(const Graph& g, VertexId v, const SignatureParams& p, LabelEncoding enc) {
  Signature s(p.words());
  auto labels = g.labels(v);
  if (enc == LabelEncoding::Direct) {
    if (labels.size() != 1) throw Error("direct label encoding needs exactly one label per vertex");
    const LabelId l = labels[0];
    for (unsigned b = 0; b < std::min(p.k_bits, 32U); ++b)
      if ((l >> b) & 1U) s.set_bit(b);
  } else {
    for (auto l : labels) s.set_bit(static_cast<unsigned>(mix64(l, p.seed ^ kLabelSalt) % p.k_bits));
  }

  // Distinct (edge label, neighbor label) keys; the same key reached via
  // several neighbors counts once.
  std::vector<std::pair<LabelId, LabelId>> keys;
  for (const auto& e : g.neighbors(v))
    for (auto nl : g.labels(e.neighbor)) keys.emplace_back(e.label, nl);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (auto [el, nl] : keys) {
    const unsigned g_idx = pair_group(el, nl, p);
    const unsigned lo = p.k_bits + 2 * g_idx;
    if (s.bit(lo))
      s.set_bit(lo + 1);
    else
      s.set_bit(lo);
  }
  return s;
}

bool signature_contains(const Signature& data_sig, const Signature& query_sig) {
  auto d = data_sig.words();
  auto q = query_sig.words();
  for (std::size_t w = 0; w < q.size(); ++w)
    if ((d[w] & q[w]) != q[w]) return false;
  return true;
}

SignatureTable SignatureTable::build(const Graph& g, const SignatureParams& p, int threads) {
  p.validate();
  SignatureTable t;
  t.params_ = p;
  t.encoding_ = choose_label_encoding(g, p);
  t.num_vertices_ = g.num_vertices();
  const unsigned words = p.words();
  t.storage_.assign(std::size_t{words} * t.num_vertices_, 0);
  const auto n = static_cast<std::int64_t>(t.num_vertices_);
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
  for (std::int64_t v = 0; v < n; ++v) {
    auto s = encode_vertex(g, static_cast<VertexId>(v), p, t.encoding_);
    for (unsigned w = 0; w < words; ++w) t.storage_[std::size_t{w} * t.num_vertices_ + v] = s.words()[w];
  }
  return t;
}

Signature SignatureTable::row(VertexId v) const {
  Signature s(params_.words());
  for (unsigned w = 0; w < params_.words(); ++w) s.words()[w] = storage_[std::size_t{w} * num_vertices_ + v];
  return s;
}

CandidateSet::CandidateSet(VertexId query_vertex, std::vector<VertexId> members, std::size_t num_data_vertices)
    : query_vertex_(query_vertex),
      members_(std::move(members)),
      bits_((num_data_vertices + 63) / 64, 0),
      universe_(num_data_vertices) {
  for (auto v : members_) bits_[v / 64] |= std::uint64_t{1} << (v % 64);
}

namespace {

/// Query signature under the table's encoding; nullopt if u's label cannot
/// occur in the data graph.
std::optional<Signature> query_signature(const Graph& q, VertexId u, const SignatureTable& table) {
  const auto& p = table.params();
  if (table.encoding() == LabelEncoding::Direct) {
    if (q.labels(u).size() != 1) throw Error("multi-label query against a single-label data graph");
    if (p.k_bits < 32 && q.label(u) >= (std::uint64_t{1} << p.k_bits)) return std::nullopt;
  }
  return encode_vertex(q, u, p, table.encoding());
}

bool label_compatible(std::span<const std::uint64_t> data_words, const Signature& qs, const SignatureTable& t) {
  if (t.encoding() != LabelEncoding::Direct) return true;
  for (unsigned w = 0; w < field_words(t.params().k_bits); ++w) {
    const auto m = field_mask(t.params().k_bits, w);
    if ((data_words[w] & m) != (qs.words()[w] & m)) return false;
  }
  return true;
}

}  // namespace

std::vector<CandidateSet> filter_candidates(const Graph& q, const SignatureTable& table, const Graph& g,
                                            int threads) {
  const std::size_t n = table.num_vertices();
  const unsigned words = table.params().words();
  const unsigned fwords = field_words(table.params().k_bits);
  std::vector<CandidateSet> out;
  out.reserve(q.num_vertices());
  std::vector<char> keep(n);
  for (VertexId u = 0; u < q.num_vertices(); ++u) {
    auto qs = query_signature(q, u, table);
    if (!qs) {
      out.emplace_back(u, std::vector<VertexId>{}, g.num_vertices());
      continue;
    }
    const auto qw = qs->words();
    const bool direct = table.encoding() == LabelEncoding::Direct;
    const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
    for (std::int64_t v = 0; v < sn; ++v) {
      bool ok = true;
      if (direct) {
        for (unsigned w = 0; w < fwords && ok; ++w) {
          const auto m = field_mask(table.params().k_bits, w);
          ok = (table.column(w)[v] & m) == (qw[w] & m);
        }
      }
      for (unsigned w = 0; w < words && ok; ++w) {
        if (qw[w] == 0) continue;
        ok = (table.column(w)[v] & qw[w]) == qw[w];
      }
      keep[v] = ok;
    }
    std::vector<VertexId> members;
    for (std::size_t v = 0; v < n; ++v)
      if (keep[v]) members.push_back(static_cast<VertexId>(v));
    out.emplace_back(u, std::move(members), g.num_vertices());
  }
  return out;
}

std::vector<CandidateSet> filter_candidates_serial(const Graph& q, const SignatureTable& table, const Graph& g) {
  std::vector<CandidateSet> out;
  for (VertexId u = 0; u < q.num_vertices(); ++u) {
    std::vector<VertexId> members;
    if (auto qs = query_signature(q, u, table)) {
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const Signature row = encode_vertex(g, v, table.params(), table.encoding());
        if (label_compatible(row.words(), *qs, table) && signature_contains(row, *qs)) members.push_back(v);
      }
    }
    out.emplace_back(u, std::move(members), g.num_vertices());
  }
  return out;
}

CandidateSet refine_multilabel(const CandidateSet& c, const Graph& q, const Graph& g) {
  auto want = q.labels(c.query_vertex());
  std::vector<VertexId> kept;
  for (auto v : c.members()) {
    auto have = g.labels(v);
    if (std::includes(have.begin(), have.end(), want.begin(), want.end())) kept.push_back(v);
  }
  return CandidateSet(c.query_vertex(), std::move(kept), g.num_vertices());
}

}  // namespace sgm
