#pragma once

// Brute-force reference implementations for tests. They use only the basic
// Graph queries (has_edge, degree, neighbors) and are meant for tiny inputs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "ktree/graph.hpp"
#include "ktree/rng.hpp"

namespace oracle {

using ktree::Graph;
using ktree::Vertex;
using VertexSet = std::vector<Vertex>;

/// Erdos-Renyi G(n, p) drawn with the library RNG.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  ktree::Rng rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::uint64_t triangles(const Graph& g) {
  std::uint64_t t = 0;
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (g.has_edge(a, b))
        for (Vertex c = b + 1; c < n; ++c)
          if (g.has_edge(a, c) && g.has_edge(b, c)) ++t;
  return t;
}

inline std::uint64_t common_neighbors(const Graph& g, const VertexSet& clique) {
  std::uint64_t count = 0;
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    if (std::find(clique.begin(), clique.end(), w) != clique.end()) continue;
    bool all = true;
    for (Vertex c : clique) all = all && g.has_edge(c, w);
    if (all) ++count;
  }
  return count;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

/// Every size-k vertex subset that is complete, in lexicographic order.
inline std::vector<VertexSet> cliques(const Graph& g, int k) {
  std::vector<VertexSet> out;
  const auto n = static_cast<int>(g.num_vertices());
  if (k < 1 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexSet s(idx.begin(), idx.end());
    if (is_clique(g, s)) out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// value -> count of common-neighbour counts over all h-cliques.
inline std::map<std::uint64_t, std::uint64_t> clique_embeddedness(const Graph& g, int h) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& c : cliques(g, h)) ++out[common_neighbors(g, c)];
  return out;
}

struct Community {
  VertexSet vertices;               // sorted union of member cliques
  std::vector<VertexSet> members;   // sorted list of member cliques
  friend bool operator<(const Community& a, const Community& b) {
    return a.members < b.members;
  }
  friend bool operator==(const Community& a, const Community& b) = default;
};

/// Clique percolation from the full clique-clique adjacency matrix.
inline std::vector<Community> communities(const Graph& g, int k) {
  const auto cl = cliques(g, k);
  const std::size_t m = cl.size();
  std::vector<std::vector<bool>> adjacent(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      VertexSet shared;
      std::set_intersection(cl[i].begin(), cl[i].end(), cl[j].begin(), cl[j].end(),
                            std::back_inserter(shared));
      adjacent[i][j] = adjacent[j][i] = static_cast<int>(shared.size()) == k - 1;
    }
  }
  std::vector<int> comp(m, -1);
  std::vector<Community> out;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    Community c;
    std::set<Vertex> verts;
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      const auto x = q.front();
      q.pop();
      c.members.push_back(cl[x]);
      verts.insert(cl[x].begin(), cl[x].end());
      for (std::size_t y = 0; y < m; ++y) {
        if (adjacent[x][y] && comp[y] < 0) {
          comp[y] = comp[s];
          q.push(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.vertices.assign(verts.begin(), verts.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Regroups a cover given as (cliques, community id per clique, vertex set per
/// community) into the canonical form returned by communities().
inline std::vector<Community> canonical_cover(const std::vector<VertexSet>& cliques,
                                              const std::vector<std::size_t>& membership,
                                              const std::vector<VertexSet>& vertices) {
  std::vector<Community> out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) out[i].vertices = vertices[i];
  for (std::size_t c = 0; c < cliques.size(); ++c) out[membership[c]].members.push_back(cliques[c]);
  for (auto& c : out) std::sort(c.members.begin(), c.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// True when every vertex's neighbours that come later in `order` form a clique.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<std::size_t> pos(g.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexSet later;
    for (Vertex w : g.neighbors(order[i]))
      if (pos[w] > i) later.push_back(w);
    if (!is_clique(g, later)) return false;
  }
  return true;
}

/// Unnormalized embeddedness law as the plain product over the recursion,
/// starting from 1 at d = k - 1.
inline double beta_product(int k, std::uint64_t d) {
  const double a = k - 2, b = (k - 1) * (k - 3);
  double value = 1.0;
  for (std::uint64_t i = static_cast<std::uint64_t>(k); i <= d; ++i) {
    const double x = static_cast<double>(i);
    value *= (a * (x - 1) - b) / (a * x - b + k);
  }
  return value;
}

/// Connected components (by vertex) that contain at least one edge.
inline std::vector<VertexSet> edge_components(const Graph& g) {
  std::vector<int> comp(g.num_vertices(), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0 || g.degree(s) == 0) continue;
    VertexSet members;
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      members.push_back(x);
      for (Vertex y = 0; y < g.num_vertices(); ++y) {
        if (comp[y] < 0 && g.has_edge(x, y)) {
          comp[y] = comp[s];
          q.push(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
