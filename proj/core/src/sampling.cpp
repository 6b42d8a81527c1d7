#include "ktree/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ktree/rng.hpp"

namespace ktree {

double mhrw_acceptance(const Graph& g, Vertex from, Vertex to) {
  const double ratio = static_cast<double>(g.degree(from)) / static_cast<double>(g.degree(to));
  return std::min(1.0, ratio);
}

WalkResult mhrw_walk(const Graph& g, const WalkConfig& cfg) {
  if (cfg.steps <= cfg.burn_in) throw std::invalid_argument("steps must exceed burn-in");
  if (g.num_vertices() == 0) throw std::invalid_argument("cannot walk an empty graph");

  Rng rng(cfg.seed);
  Vertex current;
  if (cfg.start) {
    current = *cfg.start;
    if (g.degree(current) == 0) {
      throw std::invalid_argument("start vertex " + std::to_string(current) + " is isolated");
    }
  } else {
    if (g.num_edges() == 0) throw std::invalid_argument("graph has no edges to walk");
    do {
      current = static_cast<Vertex>(rng.below(g.num_vertices()));
    } while (g.degree(current) == 0);
  }

  WalkResult result;
  result.sequence.reserve(cfg.steps + 1);
  result.sequence.push_back(current);
  for (std::uint64_t step = 0; step < cfg.steps; ++step) {
    const auto nb = g.neighbors(current);
    const Vertex proposal = nb[rng.below(nb.size())];
    // Always draw, so the stream position does not depend on the outcome.
    const double u = rng.uniform01();
    if (nb.size() >= g.degree(proposal) || u < mhrw_acceptance(g, current, proposal)) {
      current = proposal;
    }
    result.sequence.push_back(current);
  }

  result.sampled_vertices.assign(result.sequence.begin() + static_cast<std::ptrdiff_t>(cfg.burn_in),
                                 result.sequence.end());
  std::sort(result.sampled_vertices.begin(), result.sampled_vertices.end());
  result.sampled_vertices.erase(
      std::unique(result.sampled_vertices.begin(), result.sampled_vertices.end()),
      result.sampled_vertices.end());
  result.subgraph = induced_subgraph(g, result.sampled_vertices);
  return result;
}

}  // namespace ktree
