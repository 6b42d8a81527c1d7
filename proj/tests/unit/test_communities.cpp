#include <doctest.h>

#include <queue>

#include "ktree/communities.hpp"
#include "ktree/generators.hpp"
#include "ktree/union_find.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

using namespace ktree;

namespace {

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

std::vector<oracle::Community> canonical(const CommunityCover& c) {
  return oracle::canonical_cover(c.cliques, c.clique_membership, c.communities);
}

}  // namespace

TEST_CASE("union-find") {
  UnionFind uf(6);
  CHECK(uf.components() == 6);
  CHECK(uf.unite(0, 1));
  CHECK(uf.unite(2, 3));
  CHECK_FALSE(uf.unite(1, 0));
  CHECK(uf.unite(1, 3));
  CHECK(uf.same(0, 2));
  CHECK_FALSE(uf.same(0, 4));
  CHECK(uf.size_of(3) == 4);
  CHECK(uf.components() == 3);
}

TEST_CASE("enumerate_k_cliques small cases") {
  CHECK(enumerate_k_cliques(complete_graph(5), 3).size() == 10);
  Graph k33(6);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) k33.add_edge(a, b);
  CHECK(enumerate_k_cliques(k33, 3).empty());
  CHECK(enumerate_k_cliques(k33, 2).size() == 9);
  CHECK(enumerate_k_cliques(Graph(4), 1).size() == 4);
  CHECK(enumerate_k_cliques(complete_graph(3), 4).empty());
}

TEST_CASE("enumerate_k_cliques matches brute force") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const std::size_t n = 4 + seed % 9;
    const Graph g = oracle::random_graph(n, 0.25 + 0.1 * static_cast<double>(seed % 6), seed);
    for (int k = 2; k <= 6; ++k) REQUIRE(enumerate_k_cliques(g, k) == oracle::cliques(g, k));
  }
}

TEST_CASE("two triangles sharing an edge form one community") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  const auto cover = k_clique_communities(g, 3);
  REQUIRE(cover.size() == 1);
  CHECK(cover.communities[0] == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("two triangles sharing a vertex stay apart") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  const auto cover = k_clique_communities(g, 3);
  REQUIRE(cover.size() == 2);
  CHECK(cover.communities[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(cover.communities[1] == std::vector<Vertex>{2, 3, 4});
}

TEST_CASE("k=2 communities are the non-trivial connected components") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = oracle::random_graph(25, 0.06, seed);
    const auto cover = k_clique_communities(g, 2);
    auto got = cover.communities;
    std::sort(got.begin(), got.end());
    REQUIRE(got == oracle::edge_components(g));
  }
}

TEST_CASE("communities match the clique adjacency oracle") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const std::size_t n = 5 + seed % 8;
    const Graph g = oracle::random_graph(n, 0.35 + 0.08 * static_cast<double>(seed % 5), seed);
    for (int k = 3; k <= 4; ++k) {
      REQUIRE(canonical(k_clique_communities(g, k)) == oracle::communities(g, k));
    }
  }
}

TEST_CASE("cover invariants on a partial k-tree") {
  const Graph g = gen_partial_k_tree(4, 600, 120, 5);
  const auto cover = k_clique_communities(g, 4);
  REQUIRE(cover.clique_membership.size() == cover.cliques.size());
  // Union-of-members identity.
  std::vector<std::set<Vertex>> unions(cover.size());
  for (std::size_t c = 0; c < cover.cliques.size(); ++c) {
    REQUIRE(cover.clique_membership[c] < cover.size());
    unions[cover.clique_membership[c]].insert(cover.cliques[c].begin(), cover.cliques[c].end());
  }
  for (std::size_t i = 0; i < cover.size(); ++i) {
    REQUIRE(std::vector<Vertex>(unions[i].begin(), unions[i].end()) == cover.communities[i]);
  }
  // Chain property: BFS over (k-1)-overlaps inside a community reaches all its cliques.
  for (std::size_t i = 0; i < cover.size(); ++i) {
    std::vector<std::size_t> members;
    for (std::size_t c = 0; c < cover.cliques.size(); ++c)
      if (cover.clique_membership[c] == i) members.push_back(c);
    std::vector<bool> seen(members.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
      const auto x = q.front();
      q.pop();
      for (std::size_t y = 0; y < members.size(); ++y) {
        if (seen[y]) continue;
        std::vector<Vertex> shared;
        const auto& a = cover.cliques[members[x]];
        const auto& b = cover.cliques[members[y]];
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
        if (shared.size() == 3) {
          seen[y] = true;
          ++reached;
          q.push(y);
        }
      }
    }
    REQUIRE(reached == members.size());
  }
}

TEST_CASE("removing an edge never adds k-cliques") {
  Graph g = gen_k_tree(5, 200, 2).graph;
  Rng rng(3);
  std::size_t previous = enumerate_k_cliques(g, 4).size();
  for (int i = 0; i < 100; ++i) {
    const auto edges = g.edges();
    const auto e = edges[rng.below(edges.size())];
    g.remove_edge(e.u, e.v);
    const auto now = enumerate_k_cliques(g, 4).size();
    REQUIRE(now <= previous);
    previous = now;
  }
}

TEST_CASE("community size distribution") {
  CommunityCover cover;
  cover.k = 3;
  cover.communities = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 8, 9, 10, 11, 12, 13}};
  cover.cliques = {{0, 1, 2}, {1, 2, 3}, {4, 5, 6}, {5, 6, 7}, {0, 8, 9}};
  cover.clique_membership = {0, 0, 1, 1, 2};
  Histogram want;
  want.add(4, 2);
  want.add(7, 1);
  CHECK(community_size_distribution(cover) == want);
  Histogram skipped;
  skipped.add(4, 2);
  CHECK(community_size_distribution(cover, true) == skipped);
}

TEST_CASE("single-clique communities are reported by default") {
  Graph g(5);  // two triangles sharing vertex 2
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  const auto cover = k_clique_communities(g, 3);
  CHECK(community_size_distribution(cover).count(3) == 2);
  CHECK(community_size_distribution(cover, true).total() == 0);
}

TEST_CASE("community CSV outputs") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  const auto cover = k_clique_communities(g, 3);
  testing_support::TempDir dir("communities");
  write_communities_csv(cover, dir.file("c.csv"));
  CHECK(testing_support::slurp(dir.file("c.csv")) == "community_id,size\n0,4\n");
  write_community_members(cover, dir.file("m.txt"));
  CHECK(testing_support::slurp(dir.file("m.txt")) == "0 0 1 2 3\n");
  CHECK_THROWS_AS(k_clique_communities(g, 1), std::invalid_argument);
}

TEST_CASE("partial 4-tree has a heavy-tailed 5-clique community structure, BA does not") {
  const auto partial = k_clique_communities(gen_partial_k_tree(4, 2000, 400, 1), 5);
  const auto sizes = community_size_distribution(partial);
  CHECK(partial.size() >= 20);
  CHECK(sizes.max_value() >= 10 * sizes.quantile(0.5));
  const auto ba = k_clique_communities(gen_ba(9, 2000, 1), 5);
  const auto ba_sizes = community_size_distribution(ba);
  // Dense BA graphs percolate into one giant community plus a few stragglers.
  CHECK(ba_sizes.distinct() <= 3);
}
