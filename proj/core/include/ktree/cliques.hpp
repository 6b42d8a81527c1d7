#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "ktree/graph.hpp"

namespace ktree {
namespace detail {

inline void intersect_into(std::span<const Vertex> a, std::span<const Vertex> b,
                           std::vector<Vertex>& out) {
  out.clear();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

inline std::span<const Vertex> higher_neighbors(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  auto it = std::upper_bound(nb.begin(), nb.end(), v);
  return nb.subspan(static_cast<std::size_t>(it - nb.begin()));
}

template <class F>
void extend_cliques(const Graph& g, int size, std::vector<Vertex>& clique,
                    std::vector<std::vector<Vertex>>& candidates, F& f) {
  const auto depth = clique.size();
  if (static_cast<int>(depth) == size) {
    f(std::span<const Vertex>(clique));
    return;
  }
  // candidates[depth-1]: vertices above clique.back() adjacent to all of clique.
  const auto& cand = candidates[depth - 1];
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const Vertex w = cand[i];
    if (static_cast<int>(depth + 1) < size) {
      intersect_into(std::span<const Vertex>(cand).subspan(i + 1), higher_neighbors(g, w),
                     candidates[depth]);
      if (static_cast<int>(candidates[depth].size()) < size - static_cast<int>(depth) - 1) continue;
    }
    clique.push_back(w);
    extend_cliques(g, size, clique, candidates, f);
    clique.pop_back();
  }
}

}  // namespace detail

/// Calls f(span<const Vertex>) once per clique of the given size, with the
/// clique's vertices in ascending order. Cliques are visited in lexicographic
/// order. Each clique is produced once by only extending with higher ids.
template <class F>
void for_each_clique(const Graph& g, int size, F&& f) {
  if (size < 1) return;
  std::vector<Vertex> clique;
  clique.reserve(static_cast<std::size_t>(size));
  std::vector<std::vector<Vertex>> candidates(static_cast<std::size_t>(size));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    clique.push_back(v);
    if (size == 1) {
      f(std::span<const Vertex>(clique));
    } else {
      const auto hi = detail::higher_neighbors(g, v);
      if (static_cast<int>(hi.size()) >= size - 1) {
        candidates[0].assign(hi.begin(), hi.end());
        detail::extend_cliques(g, size, clique, candidates, f);
      }
    }
    clique.pop_back();
  }
}

}  // namespace ktree
