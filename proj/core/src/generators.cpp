#include "ktree/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ktree/histogram.hpp"
#include "ktree/theory.hpp"

namespace ktree {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void validate_k_tree(int k, std::uint64_t n) {
  require(k >= 2, "k must be at least 2");
  require(k <= CliqueRegistry::kMaxCliqueSize, "k exceeds the supported maximum of 16");
  require(n >= static_cast<std::uint64_t>(k), "n must be at least k");
}

void validate_mixed(int k1, int k2, const std::vector<double>& probs, std::uint64_t n) {
  require(k1 >= 2 && k1 < k2, "mixed model requires 2 <= k1 < k2");
  require(k2 <= CliqueRegistry::kMaxCliqueSize, "k2 exceeds the supported maximum of 16");
  require(probs.size() == static_cast<std::size_t>(k2 - k1 + 1),
          "probs must have k2-k1+1 entries");
  double sum = 0.0;
  for (double p : probs) {
    require(p >= 0.0 && std::isfinite(p), "probabilities must be non-negative");
    sum += p;
  }
  require(std::abs(sum - 1.0) <= 1e-9, "probabilities must sum to 1");
  require(n >= static_cast<std::uint64_t>(k2), "n must be at least k2");
}

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_double(xs[i]);
  }
  return out;
}

}  // namespace

void validate(const ModelSpec& spec) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, KTreeModel>) {
          validate_k_tree(m.k, m.n);
        } else if constexpr (std::is_same_v<T, MixedKTreeModel>) {
          validate_mixed(m.k1, m.k2, m.probs, m.n);
        } else if constexpr (std::is_same_v<T, PartialKTreeModel>) {
          validate_k_tree(m.k, m.n);
          require(m.r <= theory::edge_count(m.k, m.n), "r exceeds the k-tree edge count");
        } else {
          require(m.m >= 1, "m must be at least 1");
          require(m.n >= static_cast<std::uint64_t>(m.m) + 1, "n must exceed m");
        }
      },
      spec.model);
}

std::string model_name(const ModelSpec& spec) {
  static constexpr const char* kNames[] = {"ktree", "mixed", "partial", "ba"};
  return kNames[spec.model.index()];
}

std::vector<std::string> describe(const ModelSpec& spec) {
  std::vector<std::string> lines;
  lines.push_back("model=" + model_name(spec));
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, KTreeModel>) {
          lines.push_back("k=" + std::to_string(m.k));
        } else if constexpr (std::is_same_v<T, MixedKTreeModel>) {
          lines.push_back("k1=" + std::to_string(m.k1));
          lines.push_back("k2=" + std::to_string(m.k2));
          lines.push_back("probs=" + join(m.probs));
        } else if constexpr (std::is_same_v<T, PartialKTreeModel>) {
          lines.push_back("k=" + std::to_string(m.k));
          lines.push_back("r=" + std::to_string(m.r));
        } else {
          lines.push_back("m=" + std::to_string(m.m));
        }
        lines.push_back("n=" + std::to_string(m.n));
      },
      spec.model);
  lines.push_back("seed=" + std::to_string(spec.seed));
  lines.push_back("rng=" + std::string(Rng::kAlgorithm));
  return lines;
}

std::vector<double> default_mixed_probabilities() {
  return {0.30, 0.20, 0.16, 0.11, 0.06, 0.05, 0.04, 0.03, 0.03, 0.02};
}

CliqueGrowth::CliqueGrowth(int seed_size, int min_size, int max_size)
    : graph_(static_cast<std::size_t>(seed_size)), registry_(min_size, max_size) {
  require(seed_size >= max_size, "seed clique must be at least as large as the largest size");
  std::vector<Vertex> parent;
  for (Vertex v = 0; v < static_cast<Vertex>(seed_size); ++v) {
    for (Vertex u : parent) graph_.add_edge(u, v);
    registry_.add_vertex(parent);
    parent.push_back(v);
  }
}

Vertex CliqueGrowth::grow(int size, Rng& rng) {
  const auto clique = registry_.sample(size, rng);
  const Vertex v = graph_.add_vertex();
  for (Vertex u : clique) graph_.add_edge(u, v);
  registry_.add_vertex(clique);
  return v;
}

KTreeResult gen_k_tree(int k, std::uint64_t n, std::uint64_t seed) {
  validate_k_tree(k, n);
  Rng rng(seed);
  CliqueGrowth growth(k, k, k);
  for (std::uint64_t i = static_cast<std::uint64_t>(k); i < n; ++i) growth.grow(k, rng);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  return {growth.release_graph(), growth.release_registry(), std::move(order)};
}

MixedKTreeResult gen_mixed_k_tree_full(int k1, int k2, const std::vector<double>& probs,
                                       std::uint64_t n, std::uint64_t seed) {
  validate_mixed(k1, k2, probs, n);
  std::vector<double> cumulative(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0) last_positive = i;
  }

  Rng rng(seed);
  CliqueGrowth growth(k2, k1, k2);
  MixedKTreeResult result{Graph{}, CliqueRegistry(k1, k2), {}};
  result.attachment_sizes.reserve(n - static_cast<std::uint64_t>(k2));
  for (std::uint64_t i = static_cast<std::uint64_t>(k2); i < n; ++i) {
    const double u = rng.uniform01();
    std::size_t idx = last_positive;
    for (std::size_t j = 0; j < cumulative.size(); ++j) {
      if (u < cumulative[j] && probs[j] > 0.0) {
        idx = j;
        break;
      }
    }
    const int size = k1 + static_cast<int>(idx);
    growth.grow(size, rng);
    result.attachment_sizes.push_back(size);
  }
  result.graph = growth.release_graph();
  result.registry = growth.release_registry();
  return result;
}

Graph gen_mixed_k_tree(int k1, int k2, const std::vector<double>& probs, std::uint64_t n,
                       std::uint64_t seed) {
  return std::move(gen_mixed_k_tree_full(k1, k2, probs, n, seed).graph);
}

Graph gen_partial_k_tree(int k, std::uint64_t n, std::uint64_t r, std::uint64_t seed) {
  validate_k_tree(k, n);
  require(r <= theory::edge_count(k, n), "r exceeds the k-tree edge count");

  Rng rng(seed);
  CliqueGrowth growth(k, k, k);
  for (std::uint64_t i = static_cast<std::uint64_t>(k); i < n; ++i) growth.grow(k, rng);
  Graph g = growth.release_graph();

  auto edges = g.edges();
  for (std::uint64_t i = 0; i < r; ++i) {
    const auto j = i + rng.below(edges.size() - i);
    std::swap(edges[i], edges[j]);
  }
  for (std::uint64_t i = 0; i < r; ++i) g.remove_edge(edges[i].u, edges[i].v);
  return g;
}

Graph gen_ba(int m, std::uint64_t n, std::uint64_t seed) {
  require(m >= 1, "m must be at least 1");
  require(n >= static_cast<std::uint64_t>(m) + 1, "n must exceed m");
  Rng rng(seed);
  const auto seed_size = static_cast<Vertex>(m + 1);
  Graph g(seed_size);
  // Each edge contributes both endpoints, so a uniform draw is degree-proportional.
  std::vector<Vertex> endpoints;
  endpoints.reserve(2 * (static_cast<std::size_t>(m) * (m + 1) / 2 + m * (n - seed_size)));
  for (Vertex u = 0; u < seed_size; ++u) {
    for (Vertex v = u + 1; v < seed_size; ++v) {
      g.add_edge(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<Vertex> targets;
  for (std::uint64_t i = seed_size; i < n; ++i) {
    targets.clear();
    while (targets.size() < static_cast<std::size_t>(m)) {
      const Vertex t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    const Vertex v = g.add_vertex();
    for (Vertex t : targets) {
      g.add_edge(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return g;
}

Graph generate(const ModelSpec& spec) {
  validate(spec);
  return std::visit(
      [&](const auto& m) -> Graph {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, KTreeModel>) {
          return std::move(gen_k_tree(m.k, m.n, spec.seed).graph);
        } else if constexpr (std::is_same_v<T, MixedKTreeModel>) {
          return gen_mixed_k_tree(m.k1, m.k2, m.probs, m.n, spec.seed);
        } else if constexpr (std::is_same_v<T, PartialKTreeModel>) {
          return gen_partial_k_tree(m.k, m.n, m.r, spec.seed);
        } else {
          return gen_ba(m.m, m.n, spec.seed);
        }
      },
      spec.model);
}

}  // namespace ktree
