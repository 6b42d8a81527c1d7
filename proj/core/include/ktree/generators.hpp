#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ktree/clique_registry.hpp"
#include "ktree/graph.hpp"
#include "ktree/rng.hpp"

namespace ktree {

struct KTreeModel {
  int k = 3;
  std::uint64_t n = 0;
};

struct MixedKTreeModel {
  int k1 = 3;
  int k2 = 4;
  std::vector<double> probs;  // probs[i] is the weight of size k1 + i
  std::uint64_t n = 0;
};

struct PartialKTreeModel {
  int k = 3;
  std::uint64_t n = 0;
  std::uint64_t r = 0;  // edges removed
};

struct BAModel {
  int m = 1;
  std::uint64_t n = 0;
};

struct ModelSpec {
  std::variant<KTreeModel, MixedKTreeModel, PartialKTreeModel, BAModel> model;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument when the spec violates a model precondition.
void validate(const ModelSpec& spec);

/// Short model name: ktree, mixed, partial or ba.
std::string model_name(const ModelSpec& spec);

/// "key=value" lines describing the spec and the RNG, for file headers and manifests.
std::vector<std::string> describe(const ModelSpec& spec);

/// Default size weights for a mixed model over sizes 3..12, falling from 0.30 to 0.02.
std::vector<double> default_mixed_probabilities();

struct KTreeResult {
  Graph graph;
  CliqueRegistry registry;
  std::vector<Vertex> birth_order;
};

/// Grows a graph by clique attachment; shared by the k-tree family.
class CliqueGrowth {
 public:
  /// Starts from a seed clique on `seed_size` vertices; cliques of sizes
  /// [min_size, max_size] become selectable.
  CliqueGrowth(int seed_size, int min_size, int max_size);

  /// Adds one vertex attached to a uniformly random `size`-clique.
  Vertex grow(int size, Rng& rng);

  const Graph& graph() const { return graph_; }
  const CliqueRegistry& registry() const { return registry_; }
  Graph release_graph() { return std::move(graph_); }
  CliqueRegistry release_registry() { return std::move(registry_); }

 private:
  Graph graph_;
  CliqueRegistry registry_;
};

/// Random k-tree on n vertices: starts from K_k, each new vertex joins a
/// uniformly random k-clique. Vertex ids follow insertion order.
KTreeResult gen_k_tree(int k, std::uint64_t n, std::uint64_t seed);

struct MixedKTreeResult {
  Graph graph;
  CliqueRegistry registry;
  std::vector<int> attachment_sizes;  // size drawn by each non-seed vertex, by id - k2
};

/// Mixed random k-tree: starts from K_{k2}; each new vertex draws a size in
/// [k1, k2] from `probs` independently and joins a uniformly random clique of that size.
MixedKTreeResult gen_mixed_k_tree_full(int k1, int k2, const std::vector<double>& probs,
                                       std::uint64_t n, std::uint64_t seed);
Graph gen_mixed_k_tree(int k1, int k2, const std::vector<double>& probs, std::uint64_t n,
                       std::uint64_t seed);

/// Random k-tree with r edges removed uniformly without replacement.
Graph gen_partial_k_tree(int k, std::uint64_t n, std::uint64_t r, std::uint64_t seed);

/// Preferential attachment from K_{m+1}; each new vertex links to m distinct
/// vertices drawn proportionally to degree (duplicate draws are redrawn).
Graph gen_ba(int m, std::uint64_t n, std::uint64_t seed);

Graph generate(const ModelSpec& spec);

}  // namespace ktree
