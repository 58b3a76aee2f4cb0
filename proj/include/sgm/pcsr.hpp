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
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "sgm/common.hpp"
#include "sgm/graph.hpp"

namespace sgm {

/// Abstract memory-traffic counter. One group read models one 128-byte
/// transaction on the index layer; elements_scanned counts adjacency
/// entries read.
struct ProbeCounter {
  std::uint64_t groups_read = 0;
  std::uint64_t elements_scanned = 0;

  ProbeCounter& operator+=(const ProbeCounter& o) {
    groups_read += o.groups_read;
    elements_scanned += o.elements_scanned;
    return *this;
  }
  std::uint64_t total() const { return groups_read + elements_scanned; }
};

inline constexpr std::uint32_t kNoGroup = 0xFFFFFFFFu;
inline constexpr unsigned kDefaultGpn = 16;

struct ChainStats {
  std::size_t max_chain_length = 0;
  std::size_t overflowed_groups = 0;
};

/// Partitioned CSR for one edge label.
///
/// gl holds |V(D)| groups of gpn slots. Slots 0..gpn-2 are (vertex, offset)
/// pairs, prefix-packed, unused ones hold kNoVertex. Slot gpn-1 is
/// (GID, END): the next group of the overflow chain (kNoGroup terminates)
/// and the end of the last stored pair's run in ci. A pair's run ends at
/// the next pair's offset, or at END for the last pair.
class Pcsr {
 public:
  struct Slot {
    std::uint32_t vertex;
    std::uint32_t offset;
    friend bool operator==(const Slot&, const Slot&) = default;
  };

  struct Location {
    std::size_t group;
    std::size_t slot;
    std::uint32_t begin;
    std::uint32_t end;
    std::size_t groups_visited;
  };

  Pcsr() = default;

  /// Requires 2 <= gpn <= 16. Throws std::logic_error if no empty group can
  /// be found for an overflow, which the construction rules out.
  static Pcsr build(const PartitionedGraph& d, unsigned gpn = kDefaultGpn, std::uint64_t seed = kDefaultSeed);

  LabelId edge_label() const { return edge_label_; }
  unsigned gpn() const { return gpn_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t num_groups() const { return num_groups_; }
  std::span<const VertexId> column_index() const { return ci_; }
  std::span<const Slot> group(std::size_t g) const { return {gl_.data() + g * gpn_, gpn_}; }
  std::size_t home_group(VertexId v) const { return mix64(v, seed_) % num_groups_; }

  /// Walks the chain from v's home group. groups_read grows by the number
  /// of groups visited; absent vertices end at a GID of kNoGroup.
  std::optional<Location> locate(VertexId v, ProbeCounter* counter = nullptr) const;

  /// N(v, edge_label()) as a run of ci; empty if v is absent. The run is
  /// sorted ascending. elements_scanned grows by the run length.
  std::span<const VertexId> neighbors(VertexId v, ProbeCounter* counter = nullptr) const;

  /// Vertices stored, in group order.
  std::vector<VertexId> stored_vertices() const;

  ChainStats chain_stats() const;

  /// Bytes of gl and ci with 32-bit fields.
  std::size_t memory_bytes() const { return gl_.size() * sizeof(Slot) + ci_.size() * sizeof(VertexId); }

  /// Little-endian dump: magic "PCSR", version, field width, edge label,
  /// gpn, |gl|, |ci|, seed, then gl (vertex, offset per slot), then ci.
  void dump(std::ostream& out) const;
  static Pcsr load(std::istream& in);

  friend bool operator==(const Pcsr&, const Pcsr&) = default;

 private:
  LabelId edge_label_ = 0;
  unsigned gpn_ = kDefaultGpn;
  std::uint64_t seed_ = kDefaultSeed;
  std::size_t num_groups_ = 0;
  std::vector<Slot> gl_;
  std::vector<VertexId> ci_;
};

/// One PCSR per edge label of a graph; labels absent from the graph map to
/// an empty index.
class PcsrSet {
 public:
  PcsrSet() = default;
  static PcsrSet build(const Graph& g, unsigned gpn = kDefaultGpn, std::uint64_t seed = kDefaultSeed);

  const Pcsr& operator[](LabelId l) const { return l < by_label_.size() ? by_label_[l] : empty_; }
  std::size_t size() const { return by_label_.size(); }
  std::size_t memory_bytes() const;

 private:
  std::vector<Pcsr> by_label_;
  Pcsr empty_;
};

/// Reference N(v, l) layouts the PCSR is measured against.
enum class BaselineKind { CsrFullScan, Basic, Compressed };

/// Answers N(v, l) with one of the baseline layouts:
///  - CsrFullScan: plain CSR over all of N(v), every entry label-checked;
///  - Basic: one row-offset array of |V|+1 entries per label;
///  - Compressed: per-label sorted vertex-id layer, binary searched.
class BaselineIndex {
 public:
  /// Basic throws CapacityError if |L_E| x (|V|+1) offsets exceed
  /// mem_cap_bytes.
  static BaselineIndex build(const Graph& g, BaselineKind kind, std::size_t mem_cap_bytes = kDefaultMemCap);

  BaselineKind kind() const { return kind_; }
  /// Appends N(v, l) to out (cleared first).
  void neighbors(VertexId v, LabelId l, std::vector<VertexId>& out, ProbeCounter* counter = nullptr) const;
  std::size_t memory_bytes() const;

 private:
  struct LabelLayer {
    std::vector<VertexId> vertex_ids;  // Compressed only
    std::vector<std::uint32_t> offsets;
    std::vector<VertexId> ci;
  };

  BaselineKind kind_ = BaselineKind::CsrFullScan;
  std::size_t num_vertices_ = 0;
  std::vector<std::uint32_t> row_offsets_;  // CsrFullScan
  std::vector<AdjEntry> entries_;           // CsrFullScan
  std::vector<LabelLayer> layers_;          // Basic and Compressed
};

}  // namespace sgm
