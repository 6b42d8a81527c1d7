#pragma once

#include <string>
#include <vector>

#include "ktree/graph.hpp"
#include "ktree/histogram.hpp"

namespace ktree {

using Clique = std::vector<Vertex>;

/// Every k-clique once, vertices ascending, cliques in lexicographic order.
std::vector<Clique> enumerate_k_cliques(const Graph& g, int k);

/// k-clique communities (clique percolation): components of the relation
/// "two k-cliques share k-1 vertices". Vertex sets of different communities
/// may overlap.
struct CommunityCover {
  int k = 0;
  std::vector<Clique> cliques;                  // as from enumerate_k_cliques
  std::vector<std::size_t> clique_membership;   // community id per clique
  std::vector<std::vector<Vertex>> communities; // sorted vertex sets

  std::size_t size() const { return communities.size(); }
};

/// Communities are numbered by their first clique in enumeration order.
CommunityCover k_clique_communities(const Graph& g, int k);

/// Histogram of community vertex-set sizes. With `skip_single_clique`,
/// communities made of one k-clique are left out.
Histogram community_size_distribution(const CommunityCover& cover,
                                      bool skip_single_clique = false);

/// CSV `community_id,size`.
void write_communities_csv(const CommunityCover& cover, const std::string& path,
                           bool skip_single_clique = false);

/// One line per community: id followed by its vertices.
void write_community_members(const CommunityCover& cover, const std::string& path);

}  // namespace ktree
