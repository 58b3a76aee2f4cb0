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
#include <span>
#include <vector>

#include "sgm/common.hpp"
#include "sgm/graph.hpp"

namespace sgm {

struct SignatureParams {
  unsigned n_bits = 512;
  unsigned k_bits = 32;
  std::uint64_t seed = kDefaultSeed;

  /// Throws Error unless n_bits > k_bits and n_bits - k_bits is even.
  void validate() const;
  unsigned group_count() const { return (n_bits - k_bits) / 2; }
  unsigned words() const { return (n_bits + 63) / 64; }
};

/// Direct: the K-bit field holds the label id and is compared for equality.
/// Hashed: every label sets one bit of the field; compared by containment.
enum class LabelEncoding { Direct, Hashed };

/// Direct for single-label graphs whose label ids fit in K bits.
LabelEncoding choose_label_encoding(const Graph& g, const SignatureParams& p);

/// N-bit vertex signature: [0, K) label field, then (N-K)/2 two-bit groups
/// over hashed (edge label, neighbor label) keys. Group states are 00 (no
/// key), 01 (one distinct key), 11 (two or more).
class Signature {
 public:
  Signature() = default;
  explicit Signature(unsigned words) : words_(words, 0) {}

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool bit(unsigned i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set_bit(unsigned i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  /// Two-bit state of group g as (hi << 1) | lo; never 0b10.
  unsigned group_state(const SignatureParams& p, unsigned g) const {
    return (bit(p.k_bits + 2 * g + 1) ? 2U : 0U) | (bit(p.k_bits + 2 * g) ? 1U : 0U);
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

/// Group index of the (edge label, neighbor label) key.
unsigned pair_group(LabelId edge_label, LabelId neighbor_label, const SignatureParams& p);

Signature encode_vertex(const Graph& g, VertexId v, const SignatureParams& p, LabelEncoding enc);
inline Signature encode_vertex(const Graph& g, VertexId v, const SignatureParams& p) {
  return encode_vertex(g, v, p, choose_label_encoding(g, p));
}

/// (data & query) == query.
bool signature_contains(const Signature& data_sig, const Signature& query_sig);

/// Signatures of every data vertex, column-first: word w of all vertices
/// precedes word w + 1.
class SignatureTable {
 public:
  SignatureTable() = default;
  static SignatureTable build(const Graph& g, const SignatureParams& p, int threads = 0);

  const SignatureParams& params() const { return params_; }
  LabelEncoding encoding() const { return encoding_; }
  std::size_t num_vertices() const { return num_vertices_; }
  std::span<const std::uint64_t> column(unsigned w) const {
    return {storage_.data() + std::size_t{w} * num_vertices_, num_vertices_};
  }
  std::span<const std::uint64_t> storage() const { return storage_; }
  /// Transposes one vertex back to row form.
  Signature row(VertexId v) const;

 private:
  SignatureParams params_;
  LabelEncoding encoding_ = LabelEncoding::Direct;
  std::size_t num_vertices_ = 0;
  std::vector<std::uint64_t> storage_;
};

/// C(u): sorted members plus a one-bit-per-data-vertex membership view.
class CandidateSet {
 public:
  CandidateSet() = default;
  CandidateSet(VertexId query_vertex, std::vector<VertexId> members, std::size_t num_data_vertices);

  VertexId query_vertex() const { return query_vertex_; }
  std::span<const VertexId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const { return v < universe_ && ((bits_[v / 64] >> (v % 64)) & 1U); }
  std::span<const std::uint64_t> bits() const { return bits_; }

 private:
  VertexId query_vertex_ = 0;
  std::vector<VertexId> members_;
  std::vector<std::uint64_t> bits_;
  std::size_t universe_ = 0;
};

/// C(u) = { v : label-compatible(v, u) and S(v) contains S(u) } for every
/// query vertex, scanning the column-first table in parallel.
std::vector<CandidateSet> filter_candidates(const Graph& q, const SignatureTable& table, const Graph& g,
                                            int threads = 0);

/// Row-major serial reference of filter_candidates.
std::vector<CandidateSet> filter_candidates_serial(const Graph& q, const SignatureTable& table, const Graph& g);

/// Keeps v iff labels(u) is a subset of labels(v).
CandidateSet refine_multilabel(const CandidateSet& c, const Graph& q, const Graph& g);

}  // namespace sgm
