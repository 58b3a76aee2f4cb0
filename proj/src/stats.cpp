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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "sgm/engine.hpp"
#include "sgm/match_set.hpp"
#include "sgm/stats.hpp"

namespace sgm {

std::size_t MatchSet::canonicalize() {
  const std::size_t n = size();
  if (n == 0) return 0;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    auto ra = row(a), rb = row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  };
  auto equal = [&](std::size_t a, std::size_t b) {
    auto ra = row(a), rb = row(b);
    return std::equal(ra.begin(), ra.end(), rb.begin());
  };
  std::sort(idx.begin(), idx.end(), less);
  idx.erase(std::unique(idx.begin(), idx.end(), equal), idx.end());
  std::vector<VertexId> cells;
  cells.reserve(idx.size() * width_);
  for (auto i : idx) {
    auto r = row(i);
    cells.insert(cells.end(), r.begin(), r.end());
  }
  cells_.swap(cells);
  return n - idx.size();
}

bool MatchSet::subset_of(const MatchSet& other) const {
  if (empty()) return true;
  if (width_ != other.width_) return false;
  std::size_t j = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    auto r = row(i);
    auto less = [](std::span<const VertexId> a, std::span<const VertexId> b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    while (j < other.size() && less(other.row(j), r)) ++j;
    if (j == other.size() || less(r, other.row(j))) return false;
  }
  return true;
}

std::size_t MatchStats::rows_processed() const {
  std::size_t s = 0;
  for (const auto& st : steps) s += st.rows_in;
  return s;
}

std::size_t MatchStats::gba_bytes() const {
  std::size_t s = 0;
  for (const auto& st : steps) s += st.gba_bytes;
  return s;
}

ProbeCounter MatchStats::probes() const {
  ProbeCounter p;
  for (const auto& st : steps) p += st.probes;
  return p;
}

SetOpStats MatchStats::set_ops() const {
  SetOpStats s;
  for (const auto& st : steps) s += st.set_ops;
  return s;
}

std::uint64_t MatchStats::prealloc_violations() const {
  std::uint64_t v = 0;
  for (const auto& st : steps) v += st.prealloc_violations;
  return v;
}

void MatchStats::write(std::ostream& out) const {
  const auto p = probes();
  out << "rows_processed=" << rows_processed() << '\n';
  out << "gba_bytes=" << gba_bytes() << '\n';
  out << "groups_read=" << p.groups_read << '\n';
  out << "elements_scanned=" << p.elements_scanned << '\n';
  out << "flush_count=" << set_ops().flushes << '\n';
  out << "prealloc_violations=" << prealloc_violations() << '\n';
  out << "order=";
  for (std::size_t i = 0; i < order.size(); ++i) out << (i ? "," : "") << order[i];
  out << '\n';
  for (std::size_t i = 0; i < table_sizes.size(); ++i) out << "m_size." << i << '=' << table_sizes[i] << '\n';
}

Summary summarize(std::vector<double> xs) {
  Summary s;
  s.count = xs.size();
  if (xs.empty()) return s;
  std::sort(xs.begin(), xs.end());
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  auto pct = [&](double p) {
    const auto k = static_cast<std::size_t>(std::ceil(p * static_cast<double>(xs.size()))) ;
    return xs[std::min(xs.size() - 1, k == 0 ? 0 : k - 1)];
  };
  s.p50 = pct(0.50);
  s.p95 = pct(0.95);
  s.max = xs.back();
  return s;
}

}  // namespace sgm
