#include "primeclique/graph_io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "primeclique/oracle.hpp"
#include "test_support.hpp"

namespace primeclique {
namespace {

using testing::p3;

std::string parse_error_of(const std::string& text, bool dimacs = true) {
  try {
    dimacs ? parse_dimacs(text) : parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseDimacs, Examples) {
  EXPECT_EQ(parse_dimacs("p edge 3 2\ne 1 2\ne 2 3"), p3());
  const Graph g = parse_dimacs("c x\np edge 2 1\ne 1 2");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(parse_error_of("p edge 2 1\ne 1 5"), "vertex out of range, line 2");
}

TEST(ParseDimacs, Errors) {
  EXPECT_EQ(parse_error_of("e 1 2\n"), "missing p-line before edges, line 1");
  EXPECT_EQ(parse_error_of("c only\n"), "missing p-line, line 1");
  EXPECT_EQ(parse_error_of("p edge 2 1\ne 2 2\n"), "self-loop, line 2");
  EXPECT_EQ(parse_error_of("p edge 2 1\ne 1 x\n"), "malformed token 'x', line 2");
  EXPECT_EQ(parse_error_of("p edge 2 1\np edge 2 1\n"), "duplicate p-line, line 2");
  EXPECT_EQ(parse_error_of("p edge 3 2\ne 1 2\n"), "expected 2 edges, found 1, line 2");
  EXPECT_EQ(parse_error_of("p col 3 0\n"), "unsupported format 'col', line 1");
  EXPECT_EQ(parse_error_of("p edge 3 0\nq\n"), "malformed line, line 2");
}

TEST(ParseDimacs, DuplicateEdgesCollapse) {
  const Graph g = parse_dimacs("p edge 3 3\r\ne 1 2\r\ne 2 1\r\ne 2 3\r\n");
  EXPECT_EQ(g, p3());
}

TEST(ParseEdgeList, Examples) {
  EXPECT_EQ(parse_edge_list("1 2\n2 3"), p3());
  const Graph g = parse_edge_list("# c\n1 2");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(parse_error_of("1 1", false), "self-loop, line 1");
  EXPECT_EQ(parse_error_of("1 two", false), "malformed token 'two', line 1");
  EXPECT_EQ(parse_error_of("0 1", false), "vertex ids are 1-based, line 1");
  EXPECT_EQ(parse_error_of("1 2 3", false), "expected two vertex ids, line 1");
  EXPECT_EQ(parse_edge_list("").order(), 0u);
  EXPECT_EQ(parse_edge_list("2 3  # trailing\n\n").order(), 3u);
}

TEST(Generators, Examples) {
  EXPECT_EQ(gen_complete(3).size(), 3u);
  EXPECT_EQ(gen_path(4).size(), 3u);
  EXPECT_EQ(gen_cycle(5).size(), 5u);
  EXPECT_TRUE(gen_cycle(5).has_edge(5, 1));
  const Graph mm = gen_moon_moser(2);
  EXPECT_EQ(mm.order(), 6u);
  EXPECT_EQ(mm.size(), 9u);
  EXPECT_EQ(bron_kerbosch(mm).size(), 9u);
  EXPECT_EQ(gen_gnp(5, 0.0, 123).size(), 0u);
  EXPECT_EQ(gen_gnp(5, 1.0, 123).size(), 10u);
}

TEST(Generators, ParameterErrors) {
  EXPECT_THROW(gen_complete(0), ContractViolation);
  EXPECT_THROW(gen_path(0), ContractViolation);
  EXPECT_THROW(gen_cycle(2), ContractViolation);
  EXPECT_THROW(gen_gnp(5, 1.5, 0), ContractViolation);
  EXPECT_THROW(gen_gnp(5, -0.1, 0), ContractViolation);
  EXPECT_THROW(gen_moon_moser(0), ContractViolation);
}

TEST(Generators, GnpIsReproducible) {
  EXPECT_EQ(gen_gnp(40, 0.3, 7), gen_gnp(40, 0.3, 7));
  EXPECT_NE(gen_gnp(40, 0.3, 7), gen_gnp(40, 0.3, 8));
  // Frozen output: any change to the sampling procedure breaks fixtures.
  EXPECT_EQ(write_edge_list(gen_gnp(6, 0.5, 42)), "1 5\n2 3\n2 5\n2 6\n3 4\n3 5\n");
}

TEST(WriteCliques, Examples) {
  EXPECT_EQ(write_cliques({{2, 1}, {3, 2}}, false), "1 2\n2 3\n");
  EXPECT_EQ(write_cliques({}, false), "");
  EXPECT_EQ(write_cliques({{2, 3}, {1, 2}}, true, PrimeAssignment::first_primes(3)),
            "1 2\t6\n2 3\t15\n");
}

TEST(WriteCliques, NumericNotStringOrder) {
  EXPECT_EQ(write_cliques({{10, 11}, {2, 3}}, false), "2 3\n10 11\n");
}

TEST(RoundTrip, BothFormats) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 30, 0.3, rng);
    EXPECT_EQ(parse_dimacs(write_dimacs(g)), g);
    // Edge lists lose trailing isolated vertices; compare edge sets.
    const Graph h = parse_edge_list(write_edge_list(g));
    EXPECT_EQ(h.edges(), g.edges());
  }
}

}  // namespace
}  // namespace primeclique
