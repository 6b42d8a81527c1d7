#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ktree/graph.hpp"
#include "ktree/rng.hpp"

namespace ktree {

/// Enumerates the cliques of a graph grown by clique attachment.
///
/// In such a graph the neighbours a vertex had when it was born form a
/// clique (its parent clique), and every clique is {v} plus a subset of the
/// parent clique of its newest vertex v. The registry therefore stores only
/// the parent clique of each vertex and, for every tracked clique size j,
/// the running number of j-cliques whose newest vertex is <= v. That covers
/// each j-clique exactly once without materializing any of them.
///
/// Seed vertices are recorded with parent clique {0, ..., v-1}.
class CliqueRegistry {
 public:
  static constexpr int kMaxCliqueSize = 16;

  /// Tracks clique sizes in [min_size, max_size].
  CliqueRegistry(int min_size, int max_size);

  /// Registers the next vertex (id = num_vertices()) with its sorted parent clique.
  void add_vertex(std::span<const Vertex> parent);

  int min_size() const { return min_size_; }
  int max_size() const { return max_size_; }
  std::size_t num_vertices() const { return offsets_.size() - 1; }

  std::span<const Vertex> parent(Vertex v) const;

  /// Number of registered cliques of the given size.
  std::uint64_t count(int size) const;

  /// Uniformly random registered clique of the given size, sorted.
  std::vector<Vertex> sample(int size, Rng& rng) const;

  /// Every registered clique of the given size, each sorted, in lexicographic
  /// order. Test/diagnostic use.
  std::vector<std::vector<Vertex>> cliques(int size) const;

 private:
  const std::vector<std::uint64_t>& cumulative(int size) const;

  int min_size_;
  int max_size_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> members_;
  std::vector<std::vector<std::uint64_t>> cumulative_;
};

/// Binomial coefficient for small arguments (n <= 64).
std::uint64_t binomial(unsigned n, unsigned r);

}  // namespace ktree
