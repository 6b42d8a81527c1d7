#include "ktree/communities.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "ktree/cliques.hpp"
#include "ktree/union_find.hpp"

namespace ktree {
namespace {

struct SubsetHash {
  std::size_t operator()(const std::vector<Vertex>& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (Vertex v : s) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

std::vector<std::size_t> clique_counts(const CommunityCover& cover) {
  std::vector<std::size_t> counts(cover.communities.size(), 0);
  for (auto id : cover.clique_membership) ++counts[id];
  return counts;
}

}  // namespace

std::vector<Clique> enumerate_k_cliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be positive");
  std::vector<Clique> out;
  for_each_clique(g, k, [&](std::span<const Vertex> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

CommunityCover k_clique_communities(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("k-clique communities need k >= 2");
  CommunityCover cover;
  cover.k = k;
  cover.cliques = enumerate_k_cliques(g, k);
  const std::size_t count = cover.cliques.size();

  // Distinct k-cliques share at most k-1 vertices, so two cliques are
  // adjacent exactly when they contain a common (k-1)-subset.
  UnionFind uf(count);
  std::unordered_map<std::vector<Vertex>, std::size_t, SubsetHash> owner;
  owner.reserve(count * static_cast<std::size_t>(k));
  std::vector<Vertex> subset(static_cast<std::size_t>(k - 1));
  for (std::size_t c = 0; c < count; ++c) {
    const auto& clique = cover.cliques[c];
    for (int skip = 0; skip < k; ++skip) {
      std::size_t j = 0;
      for (int i = 0; i < k; ++i) {
        if (i != skip) subset[j++] = clique[static_cast<std::size_t>(i)];
      }
      auto [it, inserted] = owner.try_emplace(subset, c);
      if (!inserted) uf.unite(it->second, c);
    }
  }

  std::unordered_map<std::size_t, std::size_t> root_to_id;
  cover.clique_membership.resize(count);
  for (std::size_t c = 0; c < count; ++c) {
    auto [it, inserted] = root_to_id.try_emplace(uf.find(c), cover.communities.size());
    if (inserted) cover.communities.emplace_back();
    cover.clique_membership[c] = it->second;
    auto& members = cover.communities[it->second];
    members.insert(members.end(), cover.cliques[c].begin(), cover.cliques[c].end());
  }
  for (auto& members : cover.communities) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  return cover;
}

Histogram community_size_distribution(const CommunityCover& cover, bool skip_single_clique) {
  const auto counts = clique_counts(cover);
  Histogram h;
  for (std::size_t i = 0; i < cover.communities.size(); ++i) {
    if (skip_single_clique && counts[i] == 1) continue;
    h.add(cover.communities[i].size());
  }
  return h;
}

void write_communities_csv(const CommunityCover& cover, const std::string& path,
                           bool skip_single_clique) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  const auto counts = clique_counts(cover);
  out << "community_id,size\n";
  for (std::size_t i = 0; i < cover.communities.size(); ++i) {
    if (skip_single_clique && counts[i] == 1) continue;
    out << i << ',' << cover.communities[i].size() << '\n';
  }
}

void write_community_members(const CommunityCover& cover, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (std::size_t i = 0; i < cover.communities.size(); ++i) {
    out << i;
    for (Vertex v : cover.communities[i]) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace ktree
