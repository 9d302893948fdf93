#include <gtest/gtest.h>

#include <random>

#include "ssg/scc.hpp"
#include "support.hpp"

namespace ssg {
namespace {

TEST(Scc, SmallGraph) {
  // 0 -> 1 -> 2 -> 0, 2 -> 3, 3 -> 3, 4 isolated.
  const std::vector<std::vector<std::uint32_t>> adj = {{1}, {2}, {0, 3}, {3}, {}};
  const SccResult r = strongly_connected_components(adj);
  EXPECT_EQ(r.count, 3u);
  EXPECT_EQ(r.component[0], r.component[1]);
  EXPECT_EQ(r.component[1], r.component[2]);
  EXPECT_NE(r.component[2], r.component[3]);
  EXPECT_TRUE(r.on_cycle[0] && r.on_cycle[3]);
  EXPECT_FALSE(r.on_cycle[4]);
  EXPECT_TRUE(r.has_exit[r.component[0]]);
  EXPECT_FALSE(r.has_exit[r.component[3]]);
  EXPECT_FALSE(r.has_exit[r.component[4]]);
  EXPECT_GT(r.component[0], r.component[3]);
}

TEST(Scc, IgnoresAbsentEdges) {
  const std::vector<std::vector<std::uint32_t>> adj = {{kNoVertex, 1}, {kNoVertex}};
  const SccResult r = strongly_connected_components(adj);
  EXPECT_EQ(r.count, 2u);
  EXPECT_FALSE(r.on_cycle[0]);
}

TEST(Scc, LongChainDoesNotRecurse) {
  const std::uint32_t n = 200000;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t v = 0; v + 1 < n; ++v) adj[v].push_back(v + 1);
  adj[n - 1].push_back(0);
  const SccResult r = strongly_connected_components(adj);
  EXPECT_EQ(r.count, 1u);
  EXPECT_TRUE(r.on_cycle[n / 2]);
}

// Reference: u ~ v iff each reaches the other.
TEST(Scc, AgreesWithReachability) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t n = 1 + rng() % 12;
    std::vector<std::vector<std::uint32_t>> adj(n);
    const std::uint32_t edges = rng() % (2 * n + 1);
    for (std::uint32_t i = 0; i < edges; ++i) adj[rng() % n].push_back(rng() % n);
    const SccResult r = strongly_connected_components(adj);
    std::vector<std::vector<bool>> reach;
    for (std::uint32_t v = 0; v < n; ++v) reach.push_back(test::oracle::reachable(adj, v));
    for (std::uint32_t u = 0; u < n; ++u) {
      bool cyc = false;
      for (std::uint32_t w : adj[u]) cyc = cyc || reach[w][u];
      ASSERT_EQ(r.on_cycle[u], cyc);
      bool exit = false;
      for (std::uint32_t v = 0; v < n; ++v) {
        ASSERT_EQ(r.component[u] == r.component[v], reach[u][v] && reach[v][u]);
        if (reach[u][v] && !reach[v][u]) exit = true;
        if (reach[u][v] && r.component[u] != r.component[v]) ASSERT_GT(r.component[u], r.component[v]);
      }
      ASSERT_EQ(r.has_exit[r.component[u]], exit);
    }
  }
}

}  // namespace
}  // namespace ssg
