#pragma once

#include <cstdint>

namespace ktree::theory {

/// Constants of the k-tree embeddedness recursion:
///   a = k - 2,  b = (k - 1)(k - 3),  c(n) = k - (k^2 - 1)/n.
struct KTreeConstants {
  int k;
  double a;
  double b;
  double c(std::uint64_t n) const;

  static KTreeConstants of(int k);
};

/// Number of k-cliques in a random k-tree on n vertices: (n - k)k + 1.
std::uint64_t clique_count(int k, std::uint64_t n);

/// Exact edge count of a k-tree on n vertices: k(n - k) + k(k - 1)/2.
std::uint64_t edge_count(int k, std::uint64_t n);

/// Number of k-cliques containing a non-seed edge of embeddedness `emb`:
/// (k - 1) + (k - 2)(emb - (k - 1)). Requires k > 2 and emb >= k - 1.
std::uint64_t cliques_containing_edge(int k, std::uint64_t emb);

struct Ratio {
  std::uint64_t numerator;
  std::uint64_t denominator;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// Probability that the next vertex of a size-n random k-tree closes a
/// triangle over a given edge of embeddedness d, as an exact ratio of clique counts.
Ratio triangle_ratio(int k, std::uint64_t d, std::uint64_t n);

/// The same probability evaluated as ((k - 2)d - b) / (c(n) n).
double triangle_prob(int k, std::uint64_t d, std::uint64_t n);

/// Power-law exponent of h-clique embeddedness in a random k-tree: 1 + k/(k - h).
double embeddedness_exponent(int k, int h = 2);

/// log of Gamma(d - b/a) / Gamma(d - b/a + k/a + 1); finite for d up to ~1e15.
double log_beta_d(int k, std::uint64_t d);

/// Stationary coefficient of E[T_d(n)] / n up to a k-dependent constant.
/// Satisfies beta_d = ((a(d-1) - b) / (a d - b + k)) beta_{d-1}.
double beta_d(int k, std::uint64_t d);

/// Asymptotic expected fraction of edges with embeddedness d, d >= k - 1:
/// beta_d normalized over its support (closed-form telescoping sum).
double embeddedness_proportion(int k, std::uint64_t d);

/// Normalizer used by embeddedness_proportion: sum over d >= k-1 of beta_d.
double beta_sum(int k);

/// Exponential embeddedness law of random 2-trees: 3^-d.
double two_tree_law(int d);

}  // namespace ktree::theory
