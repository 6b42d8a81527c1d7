#include <doctest.h>

#include <cmath>

#include "ktree/generators.hpp"
#include "ktree/sampling.hpp"
#include "oracles.hpp"

using namespace ktree;

namespace {

Graph star(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

}  // namespace

TEST_CASE("acceptance probabilities") {
  const Graph c = cycle(8);
  CHECK(mhrw_acceptance(c, 0, 1) == 1.0);
  const Graph s = star(6);
  CHECK(mhrw_acceptance(s, 3, 0) == doctest::Approx(1.0 / 5.0));
  CHECK(mhrw_acceptance(s, 0, 3) == 1.0);
}

TEST_CASE("a walk on a regular graph never rejects") {
  const Graph c = cycle(10);
  const auto r = mhrw_walk(c, {Vertex{0}, 1000, 0, 7});
  REQUIRE(r.sequence.size() == 1001);
  CHECK(r.sequence[0] == 0);
  for (std::size_t i = 1; i < r.sequence.size(); ++i) {
    CHECK(c.has_edge(r.sequence[i - 1], r.sequence[i]));
  }
}

TEST_CASE("walk sequence stays on edges or repeats") {
  const Graph g = gen_ba(2, 300, 4);
  const auto r = mhrw_walk(g, WalkConfig::with_default_burn_in(5000, 9));
  REQUIRE(r.sequence.size() == 5001);
  std::size_t repeats = 0;
  for (std::size_t i = 1; i < r.sequence.size(); ++i) {
    const Vertex a = r.sequence[i - 1], b = r.sequence[i];
    if (a == b) {
      ++repeats;
    } else {
      REQUIRE(g.has_edge(a, b));
    }
  }
  CHECK(repeats > 0);  // proposals towards hubs are often rejected
  CHECK(std::is_sorted(r.sampled_vertices.begin(), r.sampled_vertices.end()));
  CHECK(r.subgraph.num_vertices() == r.sampled_vertices.size());
  for (Vertex i = 0; i < r.sampled_vertices.size(); ++i) {
    for (Vertex j = i + 1; j < r.sampled_vertices.size(); ++j) {
      REQUIRE(r.subgraph.has_edge(i, j) == g.has_edge(r.sampled_vertices[i], r.sampled_vertices[j]));
    }
  }
}

TEST_CASE("walk is deterministic in its seed") {
  const Graph g = gen_k_tree(3, 500, 1).graph;
  const auto a = mhrw_walk(g, WalkConfig::with_default_burn_in(2000, 5));
  const auto b = mhrw_walk(g, WalkConfig::with_default_burn_in(2000, 5));
  const auto c = mhrw_walk(g, WalkConfig::with_default_burn_in(2000, 6));
  CHECK(a.sequence == b.sequence);
  CHECK(a.subgraph == b.subgraph);
  CHECK(a.sequence != c.sequence);
}

TEST_CASE("walk argument errors") {
  Graph g(5);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(mhrw_walk(g, {Vertex{3}, 10, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(mhrw_walk(g, {std::nullopt, 10, 10, 1}), std::invalid_argument);
  CHECK_THROWS_AS(mhrw_walk(Graph(3), {std::nullopt, 10, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(mhrw_walk(Graph(0), {std::nullopt, 10, 0, 1}), std::invalid_argument);
  const auto r = mhrw_walk(g, {std::nullopt, 10, 0, 1});
  CHECK(r.sampled_vertices == std::vector<Vertex>{0, 1});
}

TEST_CASE("star walk visits the centre far less than a simple walk") {
  // A simple random walk spends half its time at the centre; the uniform
  // target puts 1/n there.
  const std::size_t n = 20;
  const auto r = mhrw_walk(star(n), {Vertex{1}, 200000, 0, 11});
  std::size_t centre = 0;
  for (Vertex v : r.sequence) centre += v == 0;
  const double share = static_cast<double>(centre) / static_cast<double>(r.sequence.size());
  CHECK(share == doctest::Approx(1.0 / n).epsilon(0.15));
}

TEST_CASE("visit frequencies approach uniform") {
  const Graph g = gen_mixed_k_tree(2, 4, {0.5, 0.3, 0.2}, 40, 3);
  const auto r = mhrw_walk(g, WalkConfig::with_default_burn_in(400000, 2));
  std::vector<double> freq(g.num_vertices(), 0.0);
  const auto burn = r.sequence.size() / 11;
  for (std::size_t i = burn; i < r.sequence.size(); ++i) freq[r.sequence[i]] += 1.0;
  const double total = static_cast<double>(r.sequence.size() - burn);
  double tv = 0.0;
  for (double f : freq) tv += std::abs(f / total - 1.0 / static_cast<double>(g.num_vertices()));
  CHECK(0.5 * tv < 0.05);
}
