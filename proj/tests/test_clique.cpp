#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>
#include <vector>

#include "ringline/clique.hpp"

using namespace ringline;

namespace {

std::vector<Bitset> random_graph(std::mt19937& rng, std::size_t n, double density) {
  std::vector<Bitset> adj(n, Bitset(n));
  std::bernoulli_distribution edge(density);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) {
        adj[i].set(j);
        adj[j].set(i);
      }
  return adj;
}

// brute force over all vertex subsets
std::size_t brute_force_clique(const std::vector<Bitset>& adj, const std::vector<std::size_t>& must = {}) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    bool ok = true;
    for (auto m : must) ok = ok && ((mask >> m) & 1U);
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = i + 1; ok && j < n; ++j)
        if (((mask >> i) & 1U) && ((mask >> j) & 1U) && !adj[i].test(j)) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

}  // namespace

TEST(MaxClique, EmptyAndEdgeless) {
  EXPECT_TRUE(max_clique({}).empty());
  const std::vector<Bitset> lonely(5, Bitset(5));
  EXPECT_EQ(max_clique(lonely).size(), 1U);
}

TEST(MaxClique, CompleteGraph) {
  std::vector<Bitset> adj(7, Bitset(7));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      if (i != j) adj[i].set(j);
  EXPECT_EQ(max_clique(adj).size(), 7U);
}

TEST(MaxClique, RandomGraphsAgainstBruteForce) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 4 + trial % 12;
    const auto adj = random_graph(rng, n, 0.3 + 0.05 * (trial % 10));
    MaxCliqueSearch search(adj);
    const auto c = search.solve();
    EXPECT_TRUE(search.is_clique(c));
    EXPECT_EQ(c.size(), brute_force_clique(adj)) << "trial " << trial;
  }
}

TEST(MaxClique, SeedIsKeptWhenExtendable) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 8 + trial % 8;
    auto adj = random_graph(rng, n, 0.6);
    adj[0].set(1);
    adj[1].set(0);
    MaxCliqueSearch search(adj);
    const auto c = search.solve({0, 1});
    ASSERT_GE(c.size(), 2U);
    EXPECT_TRUE(search.is_clique(c));
    EXPECT_EQ(c.size(), brute_force_clique(adj));
    if (brute_force_clique(adj, {0, 1}) == c.size()) {
      EXPECT_EQ(c[0], 0U);
      EXPECT_EQ(c[1], 1U);
    }
  }
}

TEST(MaxClique, NonCliqueSeedIsIgnored) {
  // path 0-1-2 plus triangle 3-4-5
  std::vector<Bitset> adj(6, Bitset(6));
  auto link = [&](std::size_t a, std::size_t b) {
    adj[a].set(b);
    adj[b].set(a);
  };
  link(0, 1);
  link(1, 2);
  link(3, 4);
  link(4, 5);
  link(3, 5);
  const auto c = max_clique(adj, {0, 2});
  EXPECT_EQ(std::set<std::size_t>(c.begin(), c.end()), (std::set<std::size_t>{3, 4, 5}));
}
