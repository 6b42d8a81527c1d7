#include "ktree/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ktree {

Vertex Graph::add_vertex() {
  adj_.emplace_back();
  return static_cast<Vertex>(adj_.size() - 1);
}

void Graph::resize(std::size_t n) {
  if (n < adj_.size()) throw std::invalid_argument("Graph::resize cannot shrink");
  adj_.resize(n);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= adj_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                            std::to_string(adj_.size()) + ")");
  }
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));

  auto insert = [](std::vector<Vertex>& list, Vertex x) {
    // Generators append increasing ids, so the back is the common case.
    if (list.empty() || list.back() < x) {
      list.push_back(x);
      return true;
    }
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) return false;
    list.insert(it, x);
    return true;
  };
  if (!insert(adj_[u], v)) return false;
  insert(adj_[v], u);
  ++num_edges_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  auto erase = [](std::vector<Vertex>& list, Vertex x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) return false;
    list.erase(it);
    return true;
  };
  if (!erase(adj_[u], v)) return false;
  erase(adj_[v], u);
  --num_edges_;
  weights_.erase(key(u, v));
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex x = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), x);
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return adj_[v].size();
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for_each_edge([&](Vertex u, Vertex v) { out.push_back({u, v}); });
  return out;
}

void Graph::add_weight(Vertex u, Vertex v, std::uint64_t w) {
  if (!has_edge(u, v)) {
    throw std::invalid_argument("weight on non-edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  }
  weights_[key(u, v)] += w;
}

void Graph::set_weight(Vertex u, Vertex v, std::uint64_t w) {
  if (!has_edge(u, v)) {
    throw std::invalid_argument("weight on non-edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  }
  weights_[key(u, v)] = w;
}

std::optional<std::uint64_t> Graph::weight(Vertex u, Vertex v) const {
  auto it = weights_.find(key(u, v));
  if (it == weights_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.adj_ == b.adj_ && a.weights_ == b.weights_;
}

std::size_t count_common(std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return 0;
  std::size_t count = 0;
  // Skewed sizes: binary-search the short list into the long one.
  if (b.size() > 16 * a.size()) {
    auto lo = b.begin();
    for (Vertex x : a) {
      lo = std::lower_bound(lo, b.end(), x);
      if (lo == b.end()) break;
      if (*lo == x) ++count;
    }
    return count;
  }
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::uint64_t degree_sum(const Graph& g) {
  std::uint64_t s = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) s += g.degree(v);
  return s;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  if (!std::is_sorted(vertices.begin(), vertices.end()) ||
      std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw std::invalid_argument("induced_subgraph: vertex list must be sorted and unique");
  }
  Graph sub(vertices.size());
  auto local = [&](Vertex x) -> std::optional<Vertex> {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
    if (it == vertices.end() || *it != x) return std::nullopt;
    return static_cast<Vertex>(it - vertices.begin());
  };
  for (Vertex i = 0; i < vertices.size(); ++i) {
    const Vertex u = vertices[i];
    for (Vertex x : g.neighbors(u)) {
      if (x <= u) continue;
      if (auto j = local(x)) {
        sub.add_edge(i, *j);
        if (auto w = g.weight(u, x)) sub.set_weight(i, *j, *w);
      }
    }
  }
  return sub;
}

}  // namespace ktree
