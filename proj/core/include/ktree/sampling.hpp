#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ktree/graph.hpp"

namespace ktree {

struct WalkConfig {
  std::optional<Vertex> start;  // nullopt: uniform over non-isolated vertices
  std::uint64_t steps = 0;
  std::uint64_t burn_in = 0;
  std::uint64_t seed = 0;

  /// Burn-in defaults to 10% of the steps.
  static WalkConfig with_default_burn_in(std::uint64_t steps, std::uint64_t seed,
                                         std::optional<Vertex> start = std::nullopt) {
    return {start, steps, steps / 10, seed};
  }
};

struct WalkResult {
  /// Position after each step, starting with the start vertex: steps + 1 entries.
  /// A rejected proposal repeats the current vertex.
  std::vector<Vertex> sequence;
  /// Distinct vertices visited at positions burn_in..steps, ascending.
  std::vector<Vertex> sampled_vertices;
  /// Subgraph of g induced by sampled_vertices (vertex i is sampled_vertices[i]).
  Graph subgraph;
};

/// Probability that a walker at `from` accepts the proposal `to`: min(1, deg(from)/deg(to)).
double mhrw_acceptance(const Graph& g, Vertex from, Vertex to);

/// Metropolis-Hastings random walk with uniform target distribution over the
/// start vertex's connected component.
WalkResult mhrw_walk(const Graph& g, const WalkConfig& cfg);

}  // namespace ktree
