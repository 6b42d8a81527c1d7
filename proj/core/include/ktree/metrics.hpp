#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ktree/graph.hpp"
#include "ktree/histogram.hpp"

namespace ktree {

struct EmbeddednessRecord {
  Edge edge;
  std::uint64_t emb = 0;
  std::optional<std::uint64_t> weight;
};

/// Default upper bound on h for clique embeddedness; the number of h-cliques
/// grows combinatorially with h on dense graphs.
inline constexpr int kDefaultCliqueCap = 5;

/// Number of common neighbours of the endpoints of edge {u,v}.
/// Throws std::invalid_argument when {u,v} is not an edge.
std::uint64_t edge_embeddedness(const Graph& g, Vertex u, Vertex v);

/// One record per edge (u < v, lexicographic order).
std::vector<EmbeddednessRecord> embeddedness_records(const Graph& g);

Histogram degree_distribution(const Graph& g);

/// Embeddedness of every edge, including zeros. With workers > 1 the vertex
/// range is split across threads and the partial histograms are merged.
Histogram embeddedness_distribution(const Graph& g, unsigned workers = 1);

/// For every h-clique C, the number of vertices adjacent to all of C.
/// h = 2 coincides with embeddedness_distribution.
Histogram clique_embeddedness_distribution(const Graph& g, int h, int cap = kDefaultCliqueCap);

enum class MissingWeight {
  kZero,     // edges without a weight count as weight 0
  kExclude,  // edges without a weight are skipped
};

struct ContactStrengthRow {
  std::uint64_t embeddedness = 0;
  double mean_weight = 0.0;
  std::uint64_t edge_count = 0;
};

struct ContactStrength {
  std::vector<ContactStrengthRow> rows;  // ascending by embeddedness
  std::uint64_t missing_weights = 0;     // edges that had no weight entry
};

/// Mean contact strength (edge weight) of the edges at each embeddedness value.
ContactStrength contact_strength_by_embeddedness(const Graph& g,
                                                 MissingWeight policy = MissingWeight::kZero);

/// CSV `embeddedness,mean_weight,edge_count`.
void write_contact_strength_csv(const ContactStrength& cs, const std::string& path);

/// Number of triangles, by node iteration over ordered wedges.
std::uint64_t count_triangles(const Graph& g);

}  // namespace ktree
