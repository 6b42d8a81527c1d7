#include <doctest.h>

#include "ktree/generators.hpp"
#include "ktree/metrics.hpp"
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

Histogram from_map(const std::map<std::uint64_t, std::uint64_t>& m) {
  Histogram h;
  for (const auto& [v, c] : m) h.add(v, c);
  return h;
}

}  // namespace

TEST_CASE("edge embeddedness of a 3-triangle") {
  // Edge {0,1} with three common neighbours and one private neighbour each.
  Graph g(7);
  g.add_edge(0, 1);
  for (Vertex w : {2, 3, 4}) {
    g.add_edge(0, w);
    g.add_edge(1, w);
  }
  g.add_edge(0, 5);
  g.add_edge(1, 6);
  CHECK(edge_embeddedness(g, 0, 1) == 3);
  CHECK(edge_embeddedness(g, 1, 0) == 3);
}

TEST_CASE("edge embeddedness small cases") {
  const Graph k4 = complete_graph(4);
  k4.for_each_edge([&](Vertex u, Vertex v) { CHECK(edge_embeddedness(k4, u, v) == 2); });
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(edge_embeddedness(path, 0, 1) == 0);
  CHECK_THROWS_AS(edge_embeddedness(path, 0, 2), std::invalid_argument);
}

TEST_CASE("embeddedness distribution small cases") {
  CHECK(embeddedness_distribution(complete_graph(4)) == from_map({{2, 6}}));
  Graph g(4);  // triangle 0-1-2 plus pendant 3 on vertex 0
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  CHECK(embeddedness_distribution(g) == from_map({{0, 1}, {1, 3}}));
  CHECK(embeddedness_distribution(Graph(3)).total() == 0);
}

TEST_CASE("embeddedness matches brute force on random graphs") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 20 + 15 * seed;
    const Graph g = oracle::random_graph(n, 0.05 + 0.03 * static_cast<double>(seed % 5), seed);
    std::map<std::uint64_t, std::uint64_t> brute;
    std::uint64_t sum = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
      const auto e = oracle::common_neighbors(g, {u, v});
      REQUIRE(edge_embeddedness(g, u, v) == e);
      REQUIRE(e + 1 <= std::min(g.degree(u), g.degree(v)));
      ++brute[e];
      sum += e;
    });
    const auto h = embeddedness_distribution(g);
    CHECK(h == from_map(brute));
    CHECK(h.total() == g.num_edges());
    const auto t = oracle::triangles(g);
    CHECK(sum == 3 * t);
    CHECK(count_triangles(g) == t);
  }
}

TEST_CASE("embeddedness records carry weights") {
  Graph g = complete_graph(3);
  g.set_weight(0, 2, 4);
  const auto rec = embeddedness_records(g);
  REQUIRE(rec.size() == 3);
  CHECK(rec[0].edge == Edge{0, 1});
  CHECK(rec[0].emb == 1);
  CHECK_FALSE(rec[0].weight.has_value());
  CHECK(rec[1].weight == 4u);
}

TEST_CASE("parallel embeddedness equals the sequential pass") {
  const Graph g = gen_k_tree(5, 20000, 3).graph;
  const auto serial = embeddedness_distribution(g, 1);
  for (unsigned w : {2u, 3u, 8u}) CHECK(embeddedness_distribution(g, w) == serial);
  CHECK(embeddedness_distribution(Graph(2), 4).total() == 0);
}

TEST_CASE("k-tree embeddedness lower bounds") {
  for (int k = 3; k <= 6; ++k) {
    const Graph g = gen_k_tree(k, 3000, 40 + k).graph;
    g.for_each_edge([&](Vertex u, Vertex v) {
      const auto e = edge_embeddedness(g, u, v);
      if (v >= static_cast<Vertex>(k)) {
        REQUIRE(e >= static_cast<std::uint64_t>(k - 1));
      } else {
        REQUIRE(e >= static_cast<std::uint64_t>(k - 2));
      }
    });
  }
}

TEST_CASE("degree distribution") {
  Graph star(5);
  for (Vertex v = 1; v < 5; ++v) star.add_edge(0, v);
  CHECK(degree_distribution(star) == from_map({{1, 4}, {4, 1}}));
  CHECK(degree_distribution(Graph(3)) == from_map({{0, 3}}));
}

TEST_CASE("clique embeddedness") {
  const Graph k5 = complete_graph(5);
  CHECK(clique_embeddedness_distribution(k5, 3) == from_map({{2, 10}}));
  CHECK(clique_embeddedness_distribution(k5, 5) == from_map({{0, 1}}));
  CHECK_THROWS_AS(clique_embeddedness_distribution(k5, 6), std::invalid_argument);
  CHECK_THROWS_AS(clique_embeddedness_distribution(k5, 1), std::invalid_argument);
  CHECK_NOTHROW(clique_embeddedness_distribution(k5, 6, 6));
}

TEST_CASE("clique embeddedness with h=2 is edge embeddedness") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = gen_mixed_k_tree(3, 6, {0.4, 0.3, 0.2, 0.1}, 2000, seed);
    CHECK(clique_embeddedness_distribution(g, 2) == embeddedness_distribution(g));
  }
}

TEST_CASE("clique embeddedness matches brute force on small random graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 5 + seed % 8;
    const Graph g = oracle::random_graph(n, 0.3 + 0.1 * static_cast<double>(seed % 6), seed);
    for (int h = 2; h <= 5; ++h) {
      REQUIRE(clique_embeddedness_distribution(g, h) == from_map(oracle::clique_embeddedness(g, h)));
    }
  }
}

TEST_CASE("contact strength") {
  Graph k4 = complete_graph(4);
  std::uint64_t w = 1;
  k4.for_each_edge([&](Vertex u, Vertex v) { k4.set_weight(u, v, w++); });
  const auto cs = contact_strength_by_embeddedness(k4);
  REQUIRE(cs.rows.size() == 1);
  CHECK(cs.rows[0].embeddedness == 2);
  CHECK(cs.rows[0].mean_weight == doctest::Approx(3.5));
  CHECK(cs.rows[0].edge_count == 6);
  CHECK(cs.missing_weights == 0);

  Graph same = oracle::random_graph(40, 0.2, 2);
  same.for_each_edge([&](Vertex u, Vertex v) { same.set_weight(u, v, 9); });
  for (const auto& row : contact_strength_by_embeddedness(same).rows) {
    CHECK(row.mean_weight == doctest::Approx(9.0));
  }
}

TEST_CASE("contact strength with missing weights") {
  const Graph plain = oracle::random_graph(30, 0.3, 4);
  const auto cs = contact_strength_by_embeddedness(plain);
  CHECK(cs.missing_weights == plain.num_edges());
  std::uint64_t edges = 0;
  for (const auto& row : cs.rows) {
    CHECK(row.mean_weight == 0.0);
    edges += row.edge_count;
  }
  CHECK(edges == plain.num_edges());

  Graph g(4);  // path 0-1-2-3, only the middle edge weighted
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.set_weight(1, 2, 6);
  const auto zero = contact_strength_by_embeddedness(g, MissingWeight::kZero);
  REQUIRE(zero.rows.size() == 1);
  CHECK(zero.rows[0].mean_weight == doctest::Approx(2.0));
  CHECK(zero.rows[0].edge_count == 3);
  const auto excl = contact_strength_by_embeddedness(g, MissingWeight::kExclude);
  REQUIRE(excl.rows.size() == 1);
  CHECK(excl.rows[0].mean_weight == doctest::Approx(6.0));
  CHECK(excl.rows[0].edge_count == 1);
  CHECK(excl.missing_weights == 2);
}

TEST_CASE("contact strength CSV") {
  Graph k4 = complete_graph(4);
  std::uint64_t w = 1;
  k4.for_each_edge([&](Vertex u, Vertex v) { k4.set_weight(u, v, w++); });
  testing_support::TempDir dir("contact");
  write_contact_strength_csv(contact_strength_by_embeddedness(k4), dir.file("cs.csv"));
  CHECK(testing_support::slurp(dir.file("cs.csv")) == "embeddedness,mean_weight,edge_count\n2,3.5,6\n");
}
