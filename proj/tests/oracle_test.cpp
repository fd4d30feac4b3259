#include "primeclique/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "primeclique/graph_io.hpp"
#include "test_support.hpp"

namespace primeclique {
namespace {

using testing::k3;
using testing::p3;

TEST(BronKerbosch, Examples) {
  EXPECT_EQ(bron_kerbosch(p3()), (std::vector<VertexSet>{{1, 2}, {2, 3}}));
  EXPECT_EQ(bron_kerbosch(gen_complete(4)), (std::vector<VertexSet>{{1, 2, 3, 4}}));
  const auto mm = bron_kerbosch(gen_moon_moser(2));
  EXPECT_EQ(mm.size(), 9u);
  for (const auto& c : mm) EXPECT_EQ(c.size(), 2u);
}

TEST(BronKerbosch, EdgeCases) {
  EXPECT_TRUE(bron_kerbosch(Graph(0)).empty());
  EXPECT_EQ(bron_kerbosch(Graph(3)), (std::vector<VertexSet>{{1}, {2}, {3}}));
}

TEST(IsClique, Examples) {
  EXPECT_TRUE(is_clique(p3(), {1, 2}));
  EXPECT_FALSE(is_clique(p3(), {1, 3}));
  EXPECT_TRUE(is_clique(p3(), {3}));
}

TEST(IsMaximal, Examples) {
  EXPECT_FALSE(is_maximal(k3(), {1, 2}));
  EXPECT_TRUE(is_maximal(k3(), {1, 2, 3}));
  EXPECT_TRUE(is_maximal(p3(), {1, 2}));
  EXPECT_THROW(is_maximal(p3(), {1, 3}), ContractViolation);
}

TEST(Diff, Examples) {
  const std::vector<VertexSet> truth{{1, 2, 3}, {2, 4}, {3, 5}};
  const DiffReport same = diff(truth, truth);
  EXPECT_TRUE(same.agrees());
  EXPECT_EQ(same.matched, 3u);

  const DiffReport missing = diff({{1, 2, 3}, {3, 5}}, truth);
  EXPECT_EQ(missing.missing, (std::vector<VertexSet>{{2, 4}}));
  EXPECT_TRUE(missing.extra.empty());
  EXPECT_EQ(missing.matched, 2u);

  const DiffReport extra = diff({{1, 2, 3}, {2, 3}, {2, 4}, {3, 5}}, truth);
  EXPECT_TRUE(extra.missing.empty());
  EXPECT_EQ(extra.extra, (std::vector<VertexSet>{{2, 3}}));
}

TEST(BronKerboschProperty, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    const double p = (trial % 9 + 1) / 10.0;
    const Graph g = testing::random_graph(trial % 9, p, rng);
    const auto cliques = bron_kerbosch(g);
    EXPECT_EQ(cliques, testing::brute_force_maximal_cliques(g));
  }
}

TEST(BronKerboschProperty, MaximalAndIncomparable) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(20, 0.4, rng);
    const auto cliques = bron_kerbosch(g);
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      EXPECT_TRUE(is_maximal(g, cliques[i]));
      for (std::size_t j = 0; j < cliques.size(); ++j) {
        if (i == j) continue;
        EXPECT_FALSE(std::includes(cliques[j].begin(), cliques[j].end(),
                                   cliques[i].begin(), cliques[i].end()));
      }
    }
  }
}

}  // namespace
}  // namespace primeclique
