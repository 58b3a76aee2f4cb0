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

#include "sgm/join.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <string>

namespace sgm {

namespace {

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

void WorkGroupModel::validate() const {
  if (lane_width == 0 || block_rows == 0) throw Error("lane width and block size must be positive");
  if (!(w1 > w2 && w2 > w3 && w3 > lane_width))
    throw Error("thresholds must satisfy W1 > W2 > W3 > lane width (got " + std::to_string(w1) + ", " +
                std::to_string(w2) + ", " + std::to_string(w3) + ", " + std::to_string(lane_width) + ")");
  validate_batch_bytes(batch_bytes);
}

std::size_t IntermediateTable::column_of(VertexId u) const {
  for (std::size_t j = 0; j < columns_.size(); ++j)
    if (columns_[j] == u) return j;
  throw Error("query vertex " + std::to_string(u) + " is not matched yet");
}

// ---------------------------------------------------------------------------
// Planning

std::size_t select_first_edge(std::span<const LinkingEdge> es, const LabelFrequency& freq) {
  if (es.empty()) throw Error("no linking edge");
  std::size_t best = 0;
  auto key = [&](const LinkingEdge& e) { return std::tuple(freq_of(freq, e.label), e.label, e.query_neighbor); };
  for (std::size_t i = 1; i < es.size(); ++i)
    if (key(es[i]) < key(es[best])) best = i;
  return best;
}

JoinPlan plan_join_order(const Graph& q, std::span<const CandidateSet> cands, const LabelFrequency& freq) {
  const std::size_t n = q.num_vertices();
  if (n == 0) throw Error("empty query");
  if (cands.size() != n) throw Error("one candidate set per query vertex required");
  if (!is_connected(q)) throw Error("query graph must be connected");

  std::vector<double> score(n);
  for (VertexId u = 0; u < n; ++u)
    score[u] = q.degree(u) == 0 ? std::numeric_limits<double>::infinity()
                                : static_cast<double>(cands[u].size()) / static_cast<double>(q.degree(u));

  std::vector<char> matched(n, 0);
  std::vector<char> frontier(n, 0);
  JoinPlan plan;
  auto add = [&](VertexId uc) {
    matched[uc] = 1;
    plan.order.push_back(uc);
    for (const auto& e : q.neighbors(uc)) {
      score[e.neighbor] *= static_cast<double>(freq_of(freq, e.label));
      frontier[e.neighbor] = 1;
    }
  };

  VertexId first = 0;
  for (VertexId u = 1; u < n; ++u)
    if (score[u] < score[first]) first = u;
  add(first);

  while (plan.order.size() < n) {
    VertexId best = kNoVertex;
    for (VertexId u = 0; u < n; ++u)
      if (!matched[u] && frontier[u] && (best == kNoVertex || score[u] < score[best])) best = u;
    JoinStep step;
    step.vertex = best;
    for (const auto& e : q.neighbors(best))
      if (matched[e.neighbor]) step.linking.push_back({e.neighbor, e.label});
    step.first_edge = select_first_edge(step.linking, freq);
    plan.steps.push_back(std::move(step));
    add(best);
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Prefix sums and pre-allocation

std::vector<std::size_t> exclusive_prefix_sum_serial(std::span<const std::size_t> xs) {
  std::vector<std::size_t> out(xs.size() + 1, 0);
  for (std::size_t i = 0; i < xs.size(); ++i) out[i + 1] = out[i] + xs[i];
  return out;
}

std::vector<std::size_t> exclusive_prefix_sum(std::span<const std::size_t> xs, int threads) {
  const std::size_t n = xs.size();
  const int t_req = resolve_threads(threads);
  if (n < 4096 || t_req == 1) return exclusive_prefix_sum_serial(xs);
  std::vector<std::size_t> out(n + 1, 0);
  std::vector<std::size_t> partial(static_cast<std::size_t>(t_req) + 1, 0);
#pragma omp parallel num_threads(t_req)
  {
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    const auto nt = static_cast<std::size_t>(omp_get_num_threads());
    const std::size_t chunk = (n + nt - 1) / nt;
    const std::size_t lo = std::min(n, t * chunk);
    const std::size_t hi = std::min(n, lo + chunk);
    std::size_t sum = 0;
    for (std::size_t i = lo; i < hi; ++i) sum += xs[i];
    partial[t + 1] = sum;
#pragma omp barrier
#pragma omp single
    for (std::size_t i = 1; i <= nt; ++i) partial[i] += partial[i - 1];
    std::size_t run = partial[t];
    for (std::size_t i = lo; i < hi; ++i) {
      out[i] = run;
      run += xs[i];
    }
  }
  out[n] = out[n - 1] + xs[n - 1];
  return out;
}

Gba preallocate(const IntermediateTable& m, const LinkingEdge& e0, const Pcsr& pcsr, std::size_t mem_cap_bytes,
                ProbeCounter* counter, int threads) {
  const std::size_t rows = m.rows();
  const std::size_t col = m.column_of(e0.query_neighbor);
  std::vector<std::size_t> counts(rows);
  ProbeCounter total;
  const auto srows = static_cast<std::int64_t>(rows);
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    ProbeCounter local;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < srows; ++i) counts[i] = pcsr.neighbors(m.row(i)[col], &local).size();
#pragma omp critical(sgm_prealloc_probes)
    total += local;
  }
  if (counter) *counter += total;

  Gba gba;
  gba.offsets = exclusive_prefix_sum(counts, threads);
  const std::size_t bytes = gba.offsets.back() * sizeof(VertexId);
  if (bytes > mem_cap_bytes)
    throw CapacityError("pre-allocated buffer needs " + std::to_string(bytes) + " bytes, cap is " +
                        std::to_string(mem_cap_bytes));
  gba.buffer.resize(gba.offsets.back());
  gba.valid_counts.assign(rows, 0);
  return gba;
}

// ---------------------------------------------------------------------------
// Scheduling and fetch sharing

RowSchedule schedule_rows(std::span<const std::size_t> workloads, const WorkGroupModel& wg) {
  wg.validate();
  RowSchedule s;
  s.row_class.resize(workloads.size());
  for (std::size_t i = 0; i < workloads.size(); ++i) {
    const auto load = workloads[i];
    RowClass c;
    if (load > wg.w1)
      c = RowClass::Oversized;
    else if (load > wg.w2)
      c = RowClass::Block;
    else if (load > wg.w3)
      c = RowClass::Pooled;
    else
      c = RowClass::PerRow;
    s.row_class[i] = c;
    switch (c) {
      case RowClass::Oversized: s.oversized.push_back(i); break;
      case RowClass::Block: s.block.push_back(i); break;
      case RowClass::Pooled: s.pooled.push_back(i); break;
      case RowClass::PerRow: s.per_row.push_back(i); break;
    }
  }
  return s;
}

std::vector<std::uint32_t> dedup_shared_fetch(std::span<const VertexId> ids) {
  std::vector<std::uint32_t> addr(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    std::size_t j = 0;
    while (ids[j] != ids[i]) ++j;
    addr[i] = static_cast<std::uint32_t>(j);
  }
  return addr;
}

// ---------------------------------------------------------------------------
// Join step

namespace {

struct WorkerStats {
  ProbeCounter probes;
  SetOpStats set_ops;
  std::uint64_t fetches = 0;
  std::uint64_t pair_visits = 0;
  std::uint64_t violations = 0;

  void merge_into(JoinStepStats& s) const {
    s.probes += probes;
    s.set_ops += set_ops;
    s.fetches += fetches;
    s.pair_visits += pair_visits;
    s.prealloc_violations += violations;
  }
};

/// Shared, read-only inputs of one join step. Edge slot 0 is the first edge;
/// the rest follow in plan order.
class StepKernel {
 public:
  StepKernel(const IntermediateTable& m, const JoinStep& step, const CandidateSet& c_u, const PcsrSet& pcsrs,
             const JoinOptions& opts, Gba& gba, std::vector<std::uint32_t>* visits)
      : m_(m), c_u_(c_u), opts_(opts), gba_(gba), visits_(visits) {
    order_.push_back(step.first_edge);
    for (std::size_t k = 0; k < step.linking.size(); ++k)
      if (k != step.first_edge) order_.push_back(k);
    for (auto k : order_) {
      cols_.push_back(m.column_of(step.linking[k].query_neighbor));
      pcsr_.push_back(&pcsrs[step.linking[k].label]);
    }
  }

  std::size_t edges() const { return order_.size(); }
  std::size_t column(std::size_t k) const { return cols_[k]; }

  std::span<const VertexId> fetch(std::size_t k, std::size_t row, WorkerStats& ws) const {
    ++ws.fetches;
    return pcsr_[k]->neighbors(m_.row(row)[cols_[k]], &ws.probes);
  }

  void visit(std::size_t row, std::size_t k, WorkerStats& ws) const {
    ++ws.pair_visits;
    if (visits_) ++(*visits_)[row * edges() + k];
  }

  std::span<const VertexId> subtract_row(std::size_t row) const {
    return opts_.homomorphism ? std::span<const VertexId>{} : m_.row(row);
  }

  void finish(std::size_t row, std::size_t count, WorkerStats& ws) const {
    gba_.valid_counts[row] = static_cast<std::uint32_t>(count);
    if (count > gba_.capacity(row)) ++ws.violations;
  }

  /// Whole row on one worker. fetch_k(k) yields N(v_i', l_k).
  template <typename Fetch>
  void run_row(std::size_t row, Fetch&& fetch_k, WorkerStats& ws) const {
    auto seg = gba_.segment(row);
    const auto batch = opts_.wg.batch_bytes;
    std::size_t n = subtract_and_filter(fetch_k(0), subtract_row(row), c_u_, seg, batch, ws.set_ops);
    visit(row, 0, ws);
    for (std::size_t k = 1; k < edges(); ++k) {
      visit(row, k, ws);
      if (n == 0) continue;
      n = intersect_with_neighbors(seg, n, fetch_k(k), batch, ws.set_ops);
    }
    finish(row, n, ws);
  }

  /// Row split into chunks that write disjoint sub-ranges of the row's own
  /// buffer segment, then compacted. Parallel across chunks when requested.
  template <typename Fetch>
  void run_row_chunked(std::size_t row, std::size_t chunk, bool parallel, Fetch&& fetch_k, WorkerStats& ws) const {
    auto seg = gba_.segment(row);
    const auto batch = opts_.wg.batch_bytes;
    const auto run0 = fetch_k(0);
    const auto sub = subtract_row(row);
    chunk = std::max<std::size_t>(chunk, 1);

    std::vector<std::size_t> cnt;
    auto compact = [&]() {
      std::size_t pos = 0;
      for (std::size_t c = 0; c < cnt.size(); ++c) {
        const std::size_t start = c * chunk;
        if (pos != start) std::copy_n(seg.begin() + static_cast<std::ptrdiff_t>(start), cnt[c],
                                      seg.begin() + static_cast<std::ptrdiff_t>(pos));
        pos += cnt[c];
      }
      return pos;
    };

    auto for_chunks = [&](std::size_t nchunks, auto&& body) {
      cnt.assign(nchunks, 0);
      const auto sn = static_cast<std::int64_t>(nchunks);
      if (parallel) {
#pragma omp parallel num_threads(resolve_threads(opts_.threads))
        {
          WorkerStats local;
#pragma omp for schedule(dynamic, 1)
          for (std::int64_t c = 0; c < sn; ++c) body(static_cast<std::size_t>(c), local);
#pragma omp critical(sgm_chunk_stats)
          {
            ws.probes += local.probes;
            ws.set_ops += local.set_ops;
          }
        }
      } else {
        for (std::int64_t c = 0; c < sn; ++c) body(static_cast<std::size_t>(c), ws);
      }
    };

    for_chunks((run0.size() + chunk - 1) / chunk, [&](std::size_t c, WorkerStats& local) {
      const std::size_t lo = c * chunk;
      const std::size_t len = std::min(chunk, run0.size() - lo);
      cnt[c] = subtract_and_filter(run0.subspan(lo, len), sub, c_u_, seg.subspan(lo, len), batch, local.set_ops);
    });
    std::size_t n = compact();
    visit(row, 0, ws);

    for (std::size_t k = 1; k < edges(); ++k) {
      visit(row, k, ws);
      if (n == 0) continue;
      const auto nl = fetch_k(k);
      const std::size_t live = n;
      for_chunks((live + chunk - 1) / chunk, [&](std::size_t c, WorkerStats& local) {
        const std::size_t lo = c * chunk;
        const std::size_t len = std::min(chunk, live - lo);
        auto part = seg.subspan(lo, len);
        auto nlo = std::lower_bound(nl.begin(), nl.end(), part.front());
        auto nhi = std::upper_bound(nlo, nl.end(), part.back());
        cnt[c] = intersect_with_neighbors(part, len, std::span<const VertexId>(nlo, nhi), batch, local.set_ops);
      });
      n = compact();
    }
    finish(row, n, ws);
  }

 private:
  const IntermediateTable& m_;
  const CandidateSet& c_u_;
  const JoinOptions& opts_;
  Gba& gba_;
  std::vector<std::uint32_t>* visits_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> cols_;
  std::vector<const Pcsr*> pcsr_;
};

IntermediateTable link_rows(const IntermediateTable& m, VertexId u, const Gba& gba, const JoinOptions& opts,
                            std::size_t* bytes_out) {
  const std::size_t rows = m.rows();
  const std::size_t w = m.width();
  std::vector<std::size_t> counts(gba.valid_counts.begin(), gba.valid_counts.end());
  const auto offsets = exclusive_prefix_sum(counts, opts.threads);
  const std::size_t out_rows = offsets.back();
  const std::size_t bytes = out_rows * (w + 1) * sizeof(VertexId);
  if (gba.bytes() + bytes > opts.mem_cap_bytes)
    throw CapacityError("join step needs " + std::to_string(gba.bytes() + bytes) + " bytes, cap is " +
                        std::to_string(opts.mem_cap_bytes));
  *bytes_out = bytes;

  std::vector<VertexId> columns(m.columns().begin(), m.columns().end());
  columns.push_back(u);
  std::vector<VertexId> cells(out_rows * (w + 1));
  const auto srows = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(dynamic, 64) num_threads(resolve_threads(opts.threads))
  for (std::int64_t i = 0; i < srows; ++i) {
    auto src = m.row(static_cast<std::size_t>(i));
    VertexId* dst = cells.data() + offsets[i] * (w + 1);
    for (auto z : gba.live(static_cast<std::size_t>(i))) {
      std::copy(src.begin(), src.end(), dst);
      dst[w] = z;
      dst += w + 1;
    }
  }
  return IntermediateTable(std::move(columns), std::move(cells));
}

}  // namespace

IntermediateTable join_step(const IntermediateTable& m, const JoinStep& step, const CandidateSet& c_u,
                            const PcsrSet& pcsrs, const JoinOptions& opts, JoinStepStats* stats) {
  opts.wg.validate();
  if (step.linking.empty() || step.first_edge >= step.linking.size()) throw Error("join step without linking edge");
  JoinStepStats st;
  const std::size_t rows = m.rows();
  st.rows_in = rows;
  if (rows == 0) {
    std::vector<VertexId> columns(m.columns().begin(), m.columns().end());
    columns.push_back(step.vertex);
    if (stats) *stats = st;
    return IntermediateTable(std::move(columns));
  }

  const auto& e0 = step.linking[step.first_edge];
  Gba gba = preallocate(m, e0, pcsrs[e0.label], opts.mem_cap_bytes, &st.probes, opts.threads);
  st.gba_bytes = gba.bytes();

  std::vector<std::uint32_t> visits;
  if (opts.track_visits) visits.assign(rows * step.linking.size(), 0);
  StepKernel kernel(m, step, c_u, pcsrs, opts, gba, opts.track_visits ? &visits : nullptr);

  std::vector<std::size_t> loads(rows);
  for (std::size_t i = 0; i < rows; ++i) loads[i] = gba.capacity(i);
  RowSchedule sched;
  if (opts.scheduling) {
    sched = schedule_rows(loads, opts.wg);
  } else {
    sched.row_class.assign(rows, RowClass::PerRow);
    sched.per_row.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) sched.per_row[i] = i;
  }
  st.oversized_rows = sched.oversized.size();
  st.block_rows = sched.block.size();
  st.pooled_rows = sched.pooled.size();
  st.per_row_rows = sched.per_row.size();

  // Layers 1-2: rows above W2 get the whole machine, split into W3-sized
  // chunks.
  {
    std::vector<std::size_t> heavy(sched.oversized);
    heavy.insert(heavy.end(), sched.block.begin(), sched.block.end());
    std::sort(heavy.begin(), heavy.end());
    WorkerStats ws;
    for (auto row : heavy) {
      auto fetch = [&](std::size_t k) { return kernel.fetch(k, row, ws); };
      kernel.run_row_chunked(row, opts.wg.w3, /*parallel=*/true, fetch, ws);
    }
    ws.merge_into(st);
  }

  // Layers 3-4: blocks of block_rows rows; pooled rows split evenly inside
  // the block, the rest one row per work group. Fetches of N(v, l) are
  // shared by rows of a block holding the same v.
  const std::size_t B = opts.wg.block_rows;
  const std::size_t nblocks = (rows + B - 1) / B;
  const auto sblocks = static_cast<std::int64_t>(nblocks);
  const std::size_t E = kernel.edges();
#pragma omp parallel num_threads(resolve_threads(opts.threads))
  {
    WorkerStats ws;
    std::vector<std::uint32_t> addr(E * B);
    std::vector<std::span<const VertexId>> fetched(E * B);
    std::vector<char> have(E * B);
    std::vector<VertexId> ids(B);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < sblocks; ++b) {
      const std::size_t lo = static_cast<std::size_t>(b) * B;
      const std::size_t hi = std::min(rows, lo + B);
      const std::size_t len = hi - lo;
      std::fill(have.begin(), have.end(), 0);
      for (std::size_t k = 0; k < E; ++k) {
        if (opts.dedup) {
          for (std::size_t r = 0; r < len; ++r) ids[r] = m.row(lo + r)[kernel.column(k)];
          auto a = dedup_shared_fetch(std::span<const VertexId>(ids.data(), len));
          std::copy(a.begin(), a.end(), addr.begin() + static_cast<std::ptrdiff_t>(k * B));
        } else {
          for (std::size_t r = 0; r < len; ++r) addr[k * B + r] = static_cast<std::uint32_t>(r);
        }
      }

      std::size_t pool_load = 0;
      for (std::size_t r = lo; r < hi; ++r)
        if (sched.row_class[r] == RowClass::Pooled) pool_load += loads[r];
      const std::size_t pool_chunk = std::max<std::size_t>(opts.wg.lane_width, (pool_load + B - 1) / B);

      for (std::size_t r = lo; r < hi; ++r) {
        const auto cls = sched.row_class[r];
        if (cls == RowClass::Oversized || cls == RowClass::Block) continue;
        const std::size_t local = r - lo;
        auto fetch = [&](std::size_t k) {
          const std::size_t leader = addr[k * B + local];
          const std::size_t slot = k * B + leader;
          if (!have[slot]) {
            fetched[slot] = kernel.fetch(k, lo + leader, ws);
            have[slot] = 1;
          }
          return fetched[slot];
        };
        if (cls == RowClass::Pooled)
          kernel.run_row_chunked(r, pool_chunk, /*parallel=*/false, fetch, ws);
        else
          kernel.run_row(r, fetch, ws);
      }
    }
#pragma omp critical(sgm_join_stats)
    ws.merge_into(st);
  }

  if (opts.track_visits && !visits.empty()) {
    auto [mn, mx] = std::minmax_element(visits.begin(), visits.end());
    st.min_pair_visits = *mn;
    st.max_pair_visits = *mx;
  }

  std::size_t out_bytes = 0;
  auto out = link_rows(m, step.vertex, gba, opts, &out_bytes);
  st.rows_out = out.rows();
  if (stats) *stats = st;
  return out;
}

IntermediateTable join_step_serial(const IntermediateTable& m, const JoinStep& step, const CandidateSet& c_u,
                                   const PcsrSet& pcsrs, bool homomorphism) {
  std::vector<VertexId> columns(m.columns().begin(), m.columns().end());
  columns.push_back(step.vertex);
  IntermediateTable out(columns);
  auto& cells = out.mutable_cells();
  const auto& e0 = step.linking.at(step.first_edge);
  const std::size_t c0 = m.column_of(e0.query_neighbor);
  std::vector<VertexId> buf;
  std::vector<VertexId> tmp;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    const auto run = pcsrs[e0.label].neighbors(row[c0]);
    buf.clear();
    for (auto x : run)
      if (c_u.contains(x) && (homomorphism || std::find(row.begin(), row.end(), x) == row.end())) buf.push_back(x);
    for (std::size_t k = 0; k < step.linking.size() && !buf.empty(); ++k) {
      if (k == step.first_edge) continue;
      const auto& e = step.linking[k];
      const auto nl = pcsrs[e.label].neighbors(row[m.column_of(e.query_neighbor)]);
      tmp.clear();
      std::set_intersection(buf.begin(), buf.end(), nl.begin(), nl.end(), std::back_inserter(tmp));
      buf.swap(tmp);
    }
    for (auto z : buf) {
      cells.insert(cells.end(), row.begin(), row.end());
      cells.push_back(z);
    }
  }
  return out;
}

}  // namespace sgm
