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

#include "sgm/pcsr.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace sgm {

namespace {

constexpr std::uint32_t kMagic = 0x52534350;  // "PCSR" little-endian
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kFieldBytes = 4;

void put32(std::ostream& out, std::uint32_t x) {
  std::array<char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xFF);
  out.write(b.data(), 4);
}

void put64(std::ostream& out, std::uint64_t x) {
  put32(out, static_cast<std::uint32_t>(x));
  put32(out, static_cast<std::uint32_t>(x >> 32));
}

std::uint32_t get32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 4)) throw Error("truncated PCSR dump");
  return std::uint32_t{b[0]} | std::uint32_t{b[1]} << 8 | std::uint32_t{b[2]} << 16 | std::uint32_t{b[3]} << 24;
}

std::uint64_t get64(std::istream& in) {
  auto lo = get32(in);
  auto hi = get32(in);
  return std::uint64_t{lo} | std::uint64_t{hi} << 32;
}

}  // namespace

Pcsr Pcsr::build(const PartitionedGraph& d, unsigned gpn, std::uint64_t seed) {
  if (gpn < 2 || gpn > 16) throw Error("gpn must be in [2, 16], got " + std::to_string(gpn));
  Pcsr p;
  p.edge_label_ = d.edge_label;
  p.gpn_ = gpn;
  p.seed_ = seed;
  const std::size_t n = d.num_vertices();
  p.num_groups_ = n;
  if (n == 0) return p;
  if (d.neighbors.size() >= kNoGroup) throw CapacityError("partition too large for 32-bit offsets");

  // Bucket vertex indices by hash; within a bucket keep ascending id order.
  std::vector<std::uint32_t> bucket_start(n + 1, 0);
  std::vector<std::size_t> home(n);
  for (std::size_t i = 0; i < n; ++i) {
    home[i] = mix64(d.vertices[i], seed) % n;
    ++bucket_start[home[i] + 1];
  }
  for (std::size_t g = 0; g < n; ++g) bucket_start[g + 1] += bucket_start[g];
  std::vector<std::uint32_t> bucketed(n);
  {
    std::vector<std::uint32_t> fill(bucket_start.begin(), bucket_start.end() - 1);
    for (std::size_t i = 0; i < n; ++i) bucketed[fill[home[i]]++] = static_cast<std::uint32_t>(i);
  }

  // members[g]: range of `bucketed` placed in group g.
  const std::size_t cap = gpn - 1;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> members(n, {0, 0});
  std::vector<std::uint32_t> next(n, kNoGroup);
  std::vector<char> taken(n, 0);
  for (std::size_t g = 0; g < n; ++g)
    if (bucket_start[g + 1] > bucket_start[g]) taken[g] = 1;

  for (std::size_t g = 0; g < n; ++g) {
    const std::uint32_t lo = bucket_start[g];
    const std::uint32_t hi = bucket_start[g + 1];
    if (hi == lo) continue;
    std::uint32_t first_end = static_cast<std::uint32_t>(std::min<std::size_t>(hi, lo + cap));
    members[g] = {lo, first_end};
    // Overflow: chain further empty groups, probing linearly (wrapping)
    // from the current tail of the chain.
    std::size_t tail = g;
    for (std::uint32_t pos = first_end; pos < hi;) {
      std::size_t j = tail;
      std::size_t steps = 0;
      do {
        j = (j + 1) % n;
        ++steps;
      } while (taken[j] && steps <= n);
      if (taken[j]) throw std::logic_error("PCSR build: no empty group left for overflow");
      taken[j] = 1;
      const std::uint32_t end = static_cast<std::uint32_t>(std::min<std::size_t>(hi, pos + cap));
      members[j] = {pos, end};
      next[tail] = static_cast<std::uint32_t>(j);
      tail = j;
      pos = end;
    }
  }

  p.gl_.assign(n * gpn, Slot{kNoVertex, 0});
  p.ci_.reserve(d.neighbors.size());
  std::uint32_t pos = 0;
  for (std::size_t g = 0; g < n; ++g) {
    Slot* slots = p.gl_.data() + g * gpn;
    std::size_t k = 0;
    for (auto m = members[g].first; m < members[g].second; ++m, ++k) {
      const std::uint32_t i = bucketed[m];
      slots[k] = {d.vertices[i], pos};
      auto run = d.neighbors_of(i);
      p.ci_.insert(p.ci_.end(), run.begin(), run.end());
      pos += static_cast<std::uint32_t>(run.size());
    }
    slots[gpn - 1] = {next[g], pos};
  }
  return p;
}

std::optional<Pcsr::Location> Pcsr::locate(VertexId v, ProbeCounter* counter) const {
  if (num_groups_ == 0) return std::nullopt;
  std::size_t g = home_group(v);
  std::size_t visited = 0;
  const std::size_t cap = gpn_ - 1;
  for (;;) {
    ++visited;
    if (counter) ++counter->groups_read;
    const Slot* slots = gl_.data() + g * gpn_;
    for (std::size_t k = 0; k < cap && slots[k].vertex != kNoVertex; ++k) {
      if (slots[k].vertex != v) continue;
      const bool last = k + 1 == cap || slots[k + 1].vertex == kNoVertex;
      const std::uint32_t end = last ? slots[cap].offset : slots[k + 1].offset;
      return Location{g, k, slots[k].offset, end, visited};
    }
    if (slots[cap].vertex == kNoGroup) return std::nullopt;
    g = slots[cap].vertex;
  }
}

std::span<const VertexId> Pcsr::neighbors(VertexId v, ProbeCounter* counter) const {
  auto loc = locate(v, counter);
  if (!loc) return {};
  if (counter) counter->elements_scanned += loc->end - loc->begin;
  return {ci_.data() + loc->begin, ci_.data() + loc->end};
}

std::vector<VertexId> Pcsr::stored_vertices() const {
  std::vector<VertexId> out;
  for (std::size_t g = 0; g < num_groups_; ++g)
    for (std::size_t k = 0; k + 1 < gpn_; ++k) {
      const auto& s = gl_[g * gpn_ + k];
      if (s.vertex == kNoVertex) break;
      out.push_back(s.vertex);
    }
  return out;
}

ChainStats Pcsr::chain_stats() const {
  ChainStats st;
  for (std::size_t g = 0; g < num_groups_; ++g)
    if (gl_[g * gpn_ + gpn_ - 1].vertex != kNoGroup) ++st.overflowed_groups;
  for (auto v : stored_vertices()) st.max_chain_length = std::max(st.max_chain_length, locate(v)->groups_visited);
  return st;
}

void Pcsr::dump(std::ostream& out) const {
  put32(out, kMagic);
  put32(out, kVersion);
  put32(out, kFieldBytes);
  put32(out, edge_label_);
  put32(out, gpn_);
  put32(out, static_cast<std::uint32_t>(num_groups_));
  put32(out, static_cast<std::uint32_t>(ci_.size()));
  put64(out, seed_);
  for (const auto& s : gl_) {
    put32(out, s.vertex);
    put32(out, s.offset);
  }
  for (auto v : ci_) put32(out, v);
}

Pcsr Pcsr::load(std::istream& in) {
  if (get32(in) != kMagic) throw Error("not a PCSR dump");
  if (auto v = get32(in); v != kVersion) throw Error("unsupported PCSR dump version " + std::to_string(v));
  if (get32(in) != kFieldBytes) throw Error("unsupported PCSR field width");
  Pcsr p;
  p.edge_label_ = get32(in);
  p.gpn_ = get32(in);
  if (p.gpn_ < 2 || p.gpn_ > 16) throw Error("corrupt PCSR dump: gpn");
  p.num_groups_ = get32(in);
  const std::size_t ci_size = get32(in);
  p.seed_ = get64(in);
  p.gl_.resize(p.num_groups_ * p.gpn_);
  for (auto& s : p.gl_) {
    s.vertex = get32(in);
    s.offset = get32(in);
  }
  p.ci_.resize(ci_size);
  for (auto& v : p.ci_) v = get32(in);
  return p;
}

PcsrSet PcsrSet::build(const Graph& g, unsigned gpn, std::uint64_t seed) {
  PcsrSet s;
  s.by_label_.resize(g.num_edge_labels());
  const auto labels = static_cast<std::int64_t>(g.num_edge_labels());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t l = 0; l < labels; ++l) {
    try {
      s.by_label_[l] = Pcsr::build(partition_by_edge_label(g, static_cast<LabelId>(l)), gpn, seed);
    } catch (...) {
#pragma omp critical(sgm_pcsr_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return s;
}

std::size_t PcsrSet::memory_bytes() const {
  std::size_t total = 0;
  for (const auto& p : by_label_) total += p.memory_bytes();
  return total;
}

}  // namespace sgm
