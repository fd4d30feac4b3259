#pragma once

// Command-line front end. Exit codes:
//   0  success, or solver and oracle agree
//   1  verification found a difference
//   2  usage, input or I/O error
//   3  internal integrity failure

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "primeclique/bench.hpp"
#include "primeclique/encoding.hpp"
#include "primeclique/errors.hpp"
#include "primeclique/graph_io.hpp"
#include "primeclique/oracle.hpp"
#include "primeclique/solver.hpp"

namespace primeclique::cli {

enum ExitCode : int { kOk = 0, kDiverged = 1, kUsage = 2, kIntegrity = 3 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("cannot write " + path);
}

inline Graph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  return format == "edgelist" ? parse_edge_list(text) : parse_dimacs(text);
}

struct GenOptions {
  std::string family;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveOptions {
  std::string input;
  std::string format = "dimacs";
  bool raw = false;
  bool ids = false;
  std::string stats;
};

struct VerifyOptions {
  std::string input;
  std::string format = "dimacs";
  bool raw = false;
  // Test hook: drop the first solver clique before diffing.
  bool inject_fault = false;
};

struct BenchOptions {
  std::string spec;
  std::string out;
};

inline int cmd_gen(const GenOptions& o, std::ostream&, std::ostream& err) {
  const auto family = parse_family(o.family);
  if (!family) {
    err << "unknown family '" << o.family << "'\n";
    return kUsage;
  }
  write_file(o.out, write_dimacs(generate(*family, o.n, o.p, o.seed)));
  return kOk;
}

inline std::string stats_document(const SolveOptions& o, const Graph& g,
                                  const SolverStats& s, double wall_ms,
                                  std::size_t clique_count) {
  std::ostringstream os;
  os << "family=file\n"
     << "input=" << o.input << '\n'
     << "n=" << g.order() << '\n'
     << "edges=" << g.size() << '\n'
     << "mode=" << (o.raw ? "raw" : "sanitized") << '\n'
     << "wall_ms=" << std::fixed << std::setprecision(3) << wall_ms << '\n'
     << "recursive_calls=" << s.recursive_calls << '\n'
     << "merges=" << s.merges << '\n'
     << "pivot_splits=" << s.pivot_splits << '\n'
     << "case1_count=" << s.case1_count << '\n'
     << "case2_count=" << s.case2_count << '\n'
     << "gcd_calls=" << s.gcd_calls << '\n'
     << "max_weight_bits=" << s.max_weight_bits << '\n'
     << "clique_count=" << clique_count << '\n';
  return os.str();
}

inline int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream&) {
  const Graph g = load_graph(o.input, o.format);
  const EncodedGraph eg = encode(g);
  SolverConfig config;
  config.sanitize = !o.raw;

  const auto start = std::chrono::steady_clock::now();
  const SolveResult result = find_cliques(eg, config);
  const auto stop = std::chrono::steady_clock::now();

  // Raw output keeps duplicates, so decode one by one rather than as a set.
  std::vector<VertexSet> cliques;
  cliques.reserve(result.cliques.size());
  for (const auto& id : result.cliques) cliques.push_back(decode_clique(id, eg.assignment()));
  out << write_cliques(std::move(cliques), o.ids, eg.assignment());

  if (!o.stats.empty()) {
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    write_file(o.stats, stats_document(o, g, result.stats, ms, result.cliques.size()));
  }
  return kOk;
}

inline void print_sets(std::ostream& out, std::string_view label,
                       const std::vector<VertexSet>& sets) {
  for (const auto& s : sets) {
    out << label << ':';
    for (VertexId v : s) out << ' ' << v;
    out << '\n';
  }
}

inline int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream&) {
  const Graph g = load_graph(o.input, o.format);
  const EncodedGraph eg = encode(g);
  SolverConfig config;
  config.sanitize = !o.raw;
  SolveResult result = find_cliques(eg, config);
  if (o.inject_fault && !result.cliques.empty()) result.cliques.erase(result.cliques.begin());

  const DiffReport report =
      diff(decode_cliques(result.cliques, eg.assignment()), bron_kerbosch(g));
  out << "matched=" << report.matched << " missing=" << report.missing.size()
      << " extra=" << report.extra.size() << '\n';
  print_sets(out, "missing", report.missing);
  print_sets(out, "extra", report.extra);
  return report.agrees() ? kOk : kDiverged;
}

inline int cmd_bench(const BenchOptions& o, std::ostream&, std::ostream&) {
  const auto runs = parse_bench_spec(read_file(o.spec));
  // Open the output before running so an unwritable path fails fast.
  write_file(o.out, std::string(kBenchCsvHeader) + '\n');
  std::vector<BenchRecord> records;
  records.reserve(runs.size());
  for (const auto& run : runs) records.push_back(run_bench(run));
  write_file(o.out, to_csv(records));
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal clique enumeration over prime-encoded graphs", "primeclique"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph as DIMACS");
  gen_cmd->add_option("--family", gen.family, "complete|path|cycle|gnp|moon-moser")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count (number of parts for moon-moser)")
      ->required();
  gen_cmd->add_option("--p", gen.p, "Edge probability for gnp")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed for gnp")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output DIMACS file")->required();

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "List the maximal cliques of a graph");
  solve_cmd->add_option("--input", solve.input, "Graph file")->required();
  solve_cmd->add_option("--format", solve.format)
      ->check(CLI::IsMember({"dimacs", "edgelist"}))
      ->capture_default_str();
  solve_cmd->add_flag("--raw", solve.raw, "Skip duplicate/non-maximal filtering");
  solve_cmd->add_flag("--ids", solve.ids, "Append the prime clique id to each line");
  solve_cmd->add_option("--stats", solve.stats, "Write solver stats to this file");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the solver against Bron-Kerbosch");
  verify_cmd->add_option("--input", verify.input, "Graph file")->required();
  verify_cmd->add_option("--format", verify.format)
      ->check(CLI::IsMember({"dimacs", "edgelist"}))
      ->capture_default_str();
  verify_cmd->add_flag("--raw", verify.raw, "Compare unfiltered solver output");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault)->group("");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark matrix, write CSV");
  bench_cmd->add_option("--spec", bench.spec, "Matrix spec file")->required();
  bench_cmd->add_option("--out", bench.out, "CSV output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IntegrityError& e) {
    err << "integrity failure: " << e.what() << '\n';
    return kIntegrity;
  }
  return kUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("primeclique");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace primeclique::cli
