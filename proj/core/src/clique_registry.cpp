#include "ktree/clique_registry.hpp"

#include <algorithm>
#include <functional>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ktree {

std::uint64_t binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (unsigned i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

CliqueRegistry::CliqueRegistry(int min_size, int max_size)
    : min_size_(min_size), max_size_(max_size) {
  if (min_size < 1 || min_size > max_size || max_size > kMaxCliqueSize) {
    throw std::invalid_argument("clique sizes must satisfy 1 <= min <= max <= " +
                                std::to_string(kMaxCliqueSize));
  }
  cumulative_.resize(static_cast<std::size_t>(max_size - min_size + 1));
}

void CliqueRegistry::add_vertex(std::span<const Vertex> parent) {
  const auto v = static_cast<Vertex>(num_vertices());
  if (std::adjacent_find(parent.begin(), parent.end(), std::greater_equal<>()) != parent.end()) {
    throw std::invalid_argument("parent clique must be strictly increasing");
  }
  if (!parent.empty() && parent.back() >= v) {
    throw std::invalid_argument("parent clique must contain earlier vertices only");
  }
  if (parent.size() > static_cast<std::size_t>(kMaxCliqueSize)) {
    throw std::invalid_argument("parent clique too large");
  }
  members_.insert(members_.end(), parent.begin(), parent.end());
  offsets_.push_back(members_.size());
  for (int size = min_size_; size <= max_size_; ++size) {
    auto& cum = cumulative_[static_cast<std::size_t>(size - min_size_)];
    const std::uint64_t before = cum.empty() ? 0 : cum.back();
    cum.push_back(before + binomial(static_cast<unsigned>(parent.size()),
                                    static_cast<unsigned>(size - 1)));
  }
}

std::span<const Vertex> CliqueRegistry::parent(Vertex v) const {
  if (v >= num_vertices()) throw std::out_of_range("vertex not registered");
  return std::span<const Vertex>(members_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

const std::vector<std::uint64_t>& CliqueRegistry::cumulative(int size) const {
  if (size < min_size_ || size > max_size_) {
    throw std::out_of_range("clique size " + std::to_string(size) + " is not tracked");
  }
  return cumulative_[static_cast<std::size_t>(size - min_size_)];
}

std::uint64_t CliqueRegistry::count(int size) const {
  const auto& cum = cumulative(size);
  return cum.empty() ? 0 : cum.back();
}

std::vector<Vertex> CliqueRegistry::sample(int size, Rng& rng) const {
  const auto& cum = cumulative(size);
  const std::uint64_t total = cum.empty() ? 0 : cum.back();
  if (total == 0) throw std::logic_error("no clique of size " + std::to_string(size));

  const std::uint64_t r = rng.below(total);
  const auto v = static_cast<Vertex>(std::upper_bound(cum.begin(), cum.end(), r) - cum.begin());
  const auto p = parent(v);

  // Uniform (size-1)-subset of the parent clique by partial Fisher-Yates.
  std::array<Vertex, kMaxCliqueSize> pool{};
  std::copy(p.begin(), p.end(), pool.begin());
  const auto pick = static_cast<std::size_t>(size - 1);
  for (std::size_t i = 0; i < pick; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(p.size() - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<Vertex> clique(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(pick));
  std::sort(clique.begin(), clique.end());
  clique.push_back(v);
  return clique;
}

std::vector<std::vector<Vertex>> CliqueRegistry::cliques(int size) const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(count(size));
  const auto pick = static_cast<std::size_t>(size - 1);
  for (Vertex v = 0; v < num_vertices(); ++v) {
    const auto p = parent(v);
    if (p.size() < pick) continue;
    // Enumerate pick-subsets through a selection mask.
    std::vector<bool> mask(p.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(pick), true);
    do {
      std::vector<Vertex> c;
      c.reserve(pick + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (mask[i]) c.push_back(p[i]);
      }
      c.push_back(v);
      out.push_back(std::move(c));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ktree
