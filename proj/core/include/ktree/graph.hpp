#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace ktree {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Undirected simple graph on dense vertex ids 0..n-1.
///
/// Each adjacency list is kept sorted and duplicate-free so that common
/// neighbourhoods can be computed with a merge scan. Optional integer edge
/// weights (message counts) are kept in a side table keyed by the edge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  Vertex add_vertex();
  void resize(std::size_t n);

  /// Inserts {u,v}. Returns false when the edge was already present.
  /// Throws std::invalid_argument on a self-loop and std::out_of_range on a bad id.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::size_t degree(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  template <class F>
  void for_each_edge(F&& f) const {
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (v > u) f(u, v);
      }
    }
  }

  /// Adds `w` to the weight of an existing edge.
  void add_weight(Vertex u, Vertex v, std::uint64_t w);
  void set_weight(Vertex u, Vertex v, std::uint64_t w);
  std::optional<std::uint64_t> weight(Vertex u, Vertex v) const;
  bool weighted() const { return !weights_.empty(); }
  std::size_t num_weighted_edges() const { return weights_.size(); }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(Vertex v) const;
  static std::uint64_t key(Vertex u, Vertex v) {
    const Edge e = make_edge(u, v);
    return (std::uint64_t{e.u} << 32) | e.v;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> weights_;
};

/// Size of the intersection of two sorted vertex lists.
std::size_t count_common(std::span<const Vertex> a, std::span<const Vertex> b);

/// Sum of degrees; equals 2|E| for every well-formed graph.
std::uint64_t degree_sum(const Graph& g);

/// Vertex-induced subgraph. `vertices` must be sorted and unique; vertex
/// `vertices[i]` of `g` becomes vertex `i` of the result. Weights are kept.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace ktree
