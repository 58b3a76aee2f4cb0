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

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "sgm/engine.hpp"
#include "sgm/generate.hpp"
#include "sgm/oracle.hpp"
#include "sgm/semantics.hpp"
#include "sgm/stats.hpp"

namespace fs = std::filesystem;

namespace {

struct EngineFlags {
  std::string data;
  std::string query;
  std::string mode = "iso";
  bool multi_label = false;
  unsigned gpn = sgm::kDefaultGpn;
  unsigned sig_bits = 512;
  unsigned label_bits = 32;
  std::size_t w1 = 4096;
  std::size_t w2 = 1024;
  std::size_t w3 = 256;
  int threads = 0;
  std::uint64_t seed = sgm::kDefaultSeed;
  bool stats = false;
  std::size_t mem_cap = sgm::kDefaultMemCap;

  sgm::IndexOptions index_options() const {
    sgm::IndexOptions io;
    io.gpn = gpn;
    io.signature.n_bits = sig_bits;
    io.signature.k_bits = label_bits;
    io.signature.seed = seed;
    io.threads = threads;
    return io;
  }

  sgm::JoinOptions join_options() const {
    sgm::JoinOptions o;
    o.wg.w1 = w1;
    o.wg.w2 = w2;
    o.wg.w3 = w3;
    o.threads = threads;
    o.mem_cap_bytes = mem_cap;
    return o;
  }
};

void add_engine_flags(CLI::App* cmd, EngineFlags& f, bool need_query) {
  cmd->add_option("--data", f.data, "Data graph file")->required()->check(CLI::ExistingFile);
  if (need_query) cmd->add_option("--query", f.query, "Query graph file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--mode", f.mode, "iso, hom or edge-iso")->check(CLI::IsMember({"iso", "hom", "edge-iso"}));
  cmd->add_flag("--multi-label", f.multi_label, "Allow several labels per vertex and per vertex pair");
  cmd->add_option("--gpn", f.gpn, "PCSR pairs per group + 1")->check(CLI::Range(2U, 16U));
  cmd->add_option("--sig-bits", f.sig_bits, "Signature width N");
  cmd->add_option("--label-bits", f.label_bits, "Signature label field width K");
  cmd->add_option("--w1", f.w1, "Oversized-row threshold");
  cmd->add_option("--w2", f.w2, "Block-row threshold");
  cmd->add_option("--w3", f.w3, "Pooled-row threshold");
  cmd->add_option("--threads", f.threads, "Worker threads (0 = OpenMP default)");
  cmd->add_option("--seed", f.seed, "Hash seed");
  cmd->add_flag("--stats", f.stats, "Print key=value statistics");
  cmd->add_option("--mem-cap", f.mem_cap, "Cap on join buffers in bytes");
}

void print_rows(std::ostream& out, const sgm::MatchSet& ms, const sgm::ModeMatcher& m) {
  const auto& g = m.data();
  if (m.mode() == sgm::MatchMode::EdgeIsomorphism) {
    const auto& edges = m.line_graph()->map.edges;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto r = ms.row(i);
      for (std::size_t j = 0; j < r.size(); ++j) {
        const auto& e = edges[r[j]];
        out << (j ? " " : "") << g.external_id(e.src) << '-' << g.external_id(e.dst);
      }
      out << '\n';
    }
  } else {
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto r = ms.row(i);
      for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << g.external_id(r[j]);
      out << '\n';
    }
  }
  out << "count=" << ms.size() << '\n';
}

void print_stats(std::ostream& out, const sgm::ModeStats& st) {
  st.engine.write(out);
  out << "rejected_rows=" << st.rejected_rows << '\n';
  out << "collapsed_duplicates=" << st.collapsed_duplicates << '\n';
}

int run_match(const EngineFlags& f) {
  const auto g = sgm::load_graph(f.data, f.multi_label);
  const auto q = sgm::load_graph(f.query, f.multi_label);
  const sgm::ModeMatcher matcher(g, sgm::parse_mode(f.mode), f.index_options());
  sgm::ModeStats st;
  const auto ms = matcher.match(q, f.join_options(), &st);
  print_rows(std::cout, ms, matcher);
  if (f.stats) print_stats(std::cout, st);
  return 0;
}

int run_verify(const EngineFlags& f) {
  const auto g = sgm::load_graph(f.data, f.multi_label);
  const auto q = sgm::load_graph(f.query, f.multi_label);
  const auto mode = sgm::parse_mode(f.mode);
  const sgm::ModeMatcher matcher(g, mode, f.index_options());
  const auto engine = matcher.match(q, f.join_options());
  const auto oracle = sgm::backtracking_match(q, g, mode);
  const bool same = engine == oracle;
  std::cout << "engine_count=" << engine.size() << '\n'
            << "oracle_count=" << oracle.size() << '\n'
            << (same ? "identical" : "MISMATCH") << '\n';
  return same ? 0 : 1;
}

int run_bench(const EngineFlags& f, const std::string& dir, int repeat) {
  const auto g = sgm::load_graph(f.data, f.multi_label);
  const sgm::ModeMatcher matcher(g, sgm::parse_mode(f.mode), f.index_options());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw sgm::Error("no query files in " + dir);

  std::vector<double> times;
  for (const auto& path : files) {
    const auto q = sgm::load_graph(path, f.multi_label);
    double best = 0;
    sgm::ModeStats st;
    std::size_t count = 0;
    for (int r = 0; r < repeat; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      count = matcher.match(q, f.join_options(), &st).size();
      const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
      best = r == 0 ? dt.count() : std::min(best, dt.count());
    }
    times.push_back(best);
    std::cout << "query=" << path.filename().string() << '\n' << "count=" << count << '\n' << "ms=" << best << '\n';
    if (f.stats) print_stats(std::cout, st);
  }
  const auto s = sgm::summarize(times);
  std::cout << "queries=" << s.count << '\n'
            << "mean_ms=" << s.mean << '\n'
            << "p50_ms=" << s.p50 << '\n'
            << "p95_ms=" << s.p95 << '\n'
            << "max_ms=" << s.max << '\n';
  return 0;
}

int run_build_index(const EngineFlags& f, const std::string& dump_dir) {
  const auto g = sgm::load_graph(f.data, f.multi_label);
  const auto t0 = std::chrono::steady_clock::now();
  const auto idx = sgm::DataIndex::build(g, f.index_options());
  const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
  std::cout << "vertices=" << g.num_vertices() << '\n'
            << "edges=" << g.num_edges() << '\n'
            << "edge_labels=" << idx.pcsrs().size() << '\n'
            << "pcsr_bytes=" << idx.pcsrs().memory_bytes() << '\n'
            << "signature_bytes=" << idx.signatures().storage().size() * sizeof(std::uint64_t) << '\n'
            << "build_ms=" << dt.count() << '\n';
  std::size_t max_chain = 0;
  for (std::size_t l = 0; l < idx.pcsrs().size(); ++l)
    max_chain = std::max(max_chain, idx.pcsrs()[static_cast<sgm::LabelId>(l)].chain_stats().max_chain_length);
  std::cout << "max_chain_length=" << max_chain << '\n';
  if (!dump_dir.empty()) {
    fs::create_directories(dump_dir);
    for (std::size_t l = 0; l < idx.pcsrs().size(); ++l) {
      std::ofstream out(fs::path(dump_dir) / ("label_" + std::to_string(l) + ".pcsr"), std::ios::binary);
      idx.pcsrs()[static_cast<sgm::LabelId>(l)].dump(out);
      if (!out) throw sgm::Error("cannot write PCSR dump to " + dump_dir);
    }
  }
  return 0;
}

void write_output(const sgm::Graph& g, const std::string& path) {
  if (path.empty() || path == "-")
    sgm::write_graph(std::cout, g);
  else
    sgm::save_graph(path, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgraph matching over label-partitioned CSR indexes"};
  app.require_subcommand(1);

  EngineFlags ef;
  std::string out_path;
  std::string dump_dir;
  std::string queries_dir;
  int repeat = 1;
  sgm::GenConfig gen;
  std::size_t vertices = 1000;
  double degree = 4;
  unsigned max_labels = 2;
  std::size_t query_size = 4;
  std::size_t query_count = 1;

  auto* gen_graph = app.add_subcommand("gen-graph", "Generate a random labelled graph");
  gen_graph->add_option("--vertices", vertices, "Vertex count");
  gen_graph->add_option("--degree", degree, "Mean degree");
  gen_graph->add_option("--vertex-labels", gen.vertex_labels, "|L_V|");
  gen_graph->add_option("--edge-labels", gen.edge_labels, "|L_E|");
  gen_graph->add_option("--zipf", gen.zipf, "Zipf exponent of label draws");
  gen_graph->add_option("--seed", gen.seed, "Random seed");
  gen_graph->add_flag("--multi-label", ef.multi_label, "Several labels per vertex and per vertex pair");
  gen_graph->add_option("--max-labels", max_labels, "Upper bound on labels per item with --multi-label");
  gen_graph->add_option("--out", out_path, "Output file (default stdout)");

  auto* gen_labels = app.add_subcommand("gen-labels", "Relabel a graph with Zipf-distributed labels");
  gen_labels->add_option("--data", ef.data, "Input graph")->required()->check(CLI::ExistingFile);
  gen_labels->add_option("--vertex-labels", gen.vertex_labels, "|L_V|");
  gen_labels->add_option("--edge-labels", gen.edge_labels, "|L_E|");
  gen_labels->add_option("--zipf", gen.zipf, "Zipf exponent");
  gen_labels->add_option("--seed", gen.seed, "Random seed");
  gen_labels->add_option("--out", out_path, "Output file (default stdout)");

  auto* gen_query = app.add_subcommand("gen-query", "Extract random-walk queries from a data graph");
  gen_query->add_option("--data", ef.data, "Data graph")->required()->check(CLI::ExistingFile);
  gen_query->add_flag("--multi-label", ef.multi_label, "Multi-label input");
  gen_query->add_option("--size", query_size, "Query vertex count");
  gen_query->add_option("--count", query_count, "Number of queries");
  gen_query->add_option("--seed", gen.seed, "Walk seed");
  gen_query->add_option("--out", out_path, "Output file, or directory when --count > 1");

  auto* build_index = app.add_subcommand("build-index", "Build indexes and report their size");
  add_engine_flags(build_index, ef, false);
  build_index->add_option("--dump", dump_dir, "Directory for binary PCSR dumps");

  auto* match = app.add_subcommand("match", "Find all matches of a query");
  add_engine_flags(match, ef, true);

  auto* verify = app.add_subcommand("verify", "Compare the engine with the backtracking oracle");
  add_engine_flags(verify, ef, true);

  auto* bench = app.add_subcommand("bench", "Time every query in a directory");
  add_engine_flags(bench, ef, false);
  bench->add_option("--queries", queries_dir, "Directory of query files")->required()->check(CLI::ExistingDirectory);
  bench->add_option("--repeat", repeat, "Runs per query, best time reported")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_graph) {
      const auto g = ef.multi_label ? sgm::random_multilabel_graph(vertices, degree, gen, max_labels)
                                    : sgm::random_graph(vertices, degree, gen);
      write_output(g, out_path);
    } else if (*gen_labels) {
      write_output(sgm::assign_labels(sgm::load_graph(ef.data), gen), out_path);
    } else if (*gen_query) {
      const auto g = sgm::load_graph(ef.data, ef.multi_label);
      if (query_count == 1) {
        write_output(sgm::random_walk_query(g, query_size, gen.seed), out_path);
      } else {
        if (out_path.empty()) throw sgm::Error("--out directory required with --count > 1");
        fs::create_directories(out_path);
        for (std::size_t i = 0; i < query_count; ++i) {
          const auto q = sgm::random_walk_query(g, query_size, gen.seed + i);
          sgm::save_graph(fs::path(out_path) / ("q" + std::to_string(i) + ".txt"), q);
        }
      }
    } else if (*build_index) {
      return run_build_index(ef, dump_dir);
    } else if (*match) {
      return run_match(ef);
    } else if (*verify) {
      return run_verify(ef);
    } else if (*bench) {
      return run_bench(ef, queries_dir, repeat);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
