#pragma once

// Benchmark matrix: named graph families run through the solver with stats,
// optionally checked against the oracle, written as CSV.
//
// Matrix spec, one directive per line ('#' comments):
//   repetitions R                      default repetitions for later rows
//   <family> n=LIST [p=LIST] [seed=LIST] [reps=R] [verify]
// LIST is comma separated. family is complete|path|cycle|gnp|moon-moser; for
// moon-moser n is the number of parts k. p and seed only apply to gnp (p
// defaults to 0.5, seed to 0). Rows expand n, then p, then seed, then
// repetition, in file order.

#include <charconv>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "primeclique/encoding.hpp"
#include "primeclique/errors.hpp"
#include "primeclique/graph_io.hpp"
#include "primeclique/oracle.hpp"
#include "primeclique/solver.hpp"

namespace primeclique {

enum class Family { complete, path, cycle, gnp, moon_moser };

inline std::optional<Family> parse_family(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "gnp") return Family::gnp;
  if (name == "moon-moser") return Family::moon_moser;
  return std::nullopt;
}

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::gnp: return "gnp";
    case Family::moon_moser: return "moon-moser";
  }
  return "";
}

inline Graph generate(Family f, std::size_t n, double p, std::uint64_t seed) {
  switch (f) {
    case Family::complete: return gen_complete(n);
    case Family::path: return gen_path(n);
    case Family::cycle: return gen_cycle(n);
    case Family::gnp: return gen_gnp(n, p, seed);
    case Family::moon_moser: return gen_moon_moser(n);
  }
  throw ContractViolation("unknown family");
}

struct BenchRecord {
  std::string family;
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
  SolverStats stats;
  double wall_ms = 0.0;
  std::size_t clique_count = 0;
  std::optional<bool> verified;
};

struct BenchRun {
  Family family = Family::complete;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool verify = false;
};

inline constexpr std::string_view kBenchCsvHeader =
    "family,n,p,seed,wall_ms,recursive_calls,merges,pivot_splits,gcd_calls,"
    "max_weight_bits,clique_count,verified";

namespace detail {

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view list, std::size_t line, Parse&& parse) {
  std::vector<T> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    const std::string_view item = list.substr(pos, comma - pos);
    if (item.empty()) throw ParseError("empty list item", line);
    out.push_back(parse(item, line));
    pos = comma + 1;
  }
  return out;
}

inline double parse_probability(std::string_view tok, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("malformed probability '" + std::string(tok) + "'", line);
  }
  return v;
}

}  // namespace detail

inline std::vector<BenchRun> parse_bench_spec(std::string_view text) {
  std::vector<BenchRun> runs;
  std::uint64_t default_reps = 1;
  detail::for_each_line(text, [&](std::string_view line, std::size_t no) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = detail::split_ws(line);
    if (tok.empty()) return;
    if (tok[0] == "repetitions") {
      if (tok.size() != 2) throw ParseError("malformed repetitions line", no);
      default_reps = detail::parse_count(tok[1], no);
      return;
    }
    const auto family = parse_family(tok[0]);
    if (!family) throw ParseError("unknown family '" + std::string(tok[0]) + "'", no);

    std::vector<std::uint64_t> ns;
    std::vector<double> ps{0.5};
    std::vector<std::uint64_t> seeds{0};
    std::uint64_t reps = default_reps;
    bool verify = false;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      const std::string_view t = tok[i];
      if (t == "verify") {
        verify = true;
        continue;
      }
      const auto eq = t.find('=');
      if (eq == std::string_view::npos) throw ParseError("malformed field '" + std::string(t) + "'", no);
      const std::string_view key = t.substr(0, eq);
      const std::string_view value = t.substr(eq + 1);
      if (key == "n") {
        ns = detail::parse_list<std::uint64_t>(value, no, detail::parse_count);
      } else if (key == "p") {
        ps = detail::parse_list<double>(value, no, detail::parse_probability);
      } else if (key == "seed") {
        seeds = detail::parse_list<std::uint64_t>(value, no, detail::parse_count);
      } else if (key == "reps") {
        reps = detail::parse_count(value, no);
      } else {
        throw ParseError("unknown field '" + std::string(key) + "'", no);
      }
    }
    if (ns.empty()) throw ParseError("row needs n=", no);
    if (*family != Family::gnp) {
      ps = {0.5};
      seeds = {0};
    }
    for (auto n : ns) {
      for (double p : ps) {
        for (auto seed : seeds) {
          for (std::uint64_t r = 0; r < reps; ++r) {
            runs.push_back({*family, static_cast<std::size_t>(n), p, seed, verify});
          }
        }
      }
    }
  });
  return runs;
}

inline BenchRecord run_bench(const BenchRun& run) {
  const Graph g = generate(run.family, run.n, run.p, run.seed);
  const EncodedGraph eg = encode(g);

  const auto start = std::chrono::steady_clock::now();
  SolveResult result = find_cliques(eg);
  const auto stop = std::chrono::steady_clock::now();

  BenchRecord rec;
  rec.family = std::string(family_name(run.family));
  rec.n = run.n;
  if (run.family == Family::gnp) {
    rec.p = run.p;
    rec.seed = run.seed;
  }
  rec.stats = result.stats;
  rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  rec.clique_count = result.cliques.size();
  if (run.verify) {
    rec.verified =
        diff(decode_cliques(result.cliques, eg.assignment()), bron_kerbosch(g)).agrees();
  }
  return rec;
}

inline std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream os;
  os << r.family << ',' << r.n << ',';
  if (r.p) os << *r.p;
  os << ',';
  if (r.seed) os << *r.seed;
  os << ',' << std::fixed << std::setprecision(3) << r.wall_ms << ','
     << r.stats.recursive_calls << ',' << r.stats.merges << ',' << r.stats.pivot_splits
     << ',' << r.stats.gcd_calls << ',' << r.stats.max_weight_bits << ','
     << r.clique_count << ',';
  if (r.verified) os << (*r.verified ? "true" : "false");
  return os.str();
}

inline std::string to_csv(const std::vector<BenchRecord>& records) {
  std::string out(kBenchCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += to_csv_row(r);
    out += '\n';
  }
  return out;
}

}  // namespace primeclique
