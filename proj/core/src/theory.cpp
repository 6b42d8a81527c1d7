#include "ktree/theory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ktree::theory {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_recursion_domain(int k, std::uint64_t d) {
  require(k > 2, "k must exceed 2 (got " + std::to_string(k) + ")");
  require(d >= static_cast<std::uint64_t>(k - 1),
          "embeddedness " + std::to_string(d) + " below k-1 for k=" + std::to_string(k));
}

}  // namespace

KTreeConstants KTreeConstants::of(int k) {
  require(k >= 2, "k must be at least 2");
  return {k, static_cast<double>(k - 2), static_cast<double>((k - 1) * (k - 3))};
}

double KTreeConstants::c(std::uint64_t n) const {
  require(n > 0, "n must be positive");
  return k - (static_cast<double>(k) * k - 1.0) / static_cast<double>(n);
}

std::uint64_t clique_count(int k, std::uint64_t n) {
  require(k >= 2, "k must be at least 2");
  require(n >= static_cast<std::uint64_t>(k), "n must be at least k");
  return (n - k) * k + 1;
}

std::uint64_t edge_count(int k, std::uint64_t n) {
  require(k >= 2, "k must be at least 2");
  require(n >= static_cast<std::uint64_t>(k), "n must be at least k");
  const auto ku = static_cast<std::uint64_t>(k);
  return ku * (n - ku) + ku * (ku - 1) / 2;
}

std::uint64_t cliques_containing_edge(int k, std::uint64_t emb) {
  require_recursion_domain(k, emb);
  const auto ku = static_cast<std::uint64_t>(k);
  return (ku - 1) + (ku - 2) * (emb - (ku - 1));
}

Ratio triangle_ratio(int k, std::uint64_t d, std::uint64_t n) {
  require_recursion_domain(k, d);
  require(n > static_cast<std::uint64_t>(k), "n must exceed k");
  Ratio r{cliques_containing_edge(k, d), clique_count(k, n)};
  require(r.numerator <= r.denominator,
          "embeddedness " + std::to_string(d) + " impossible at n=" + std::to_string(n));
  return r;
}

double triangle_prob(int k, std::uint64_t d, std::uint64_t n) {
  triangle_ratio(k, d, n);  // domain checks
  const auto c = KTreeConstants::of(k);
  return (c.a * static_cast<double>(d) - c.b) / (c.c(n) * static_cast<double>(n));
}

double embeddedness_exponent(int k, int h) {
  require(h >= 2, "h must be at least 2");
  require(h < k, "h must be smaller than k");
  return 1.0 + static_cast<double>(k) / (k - h);
}

namespace {

// ln G(x + s) - ln G(x) for x > 0, s >= 0. Subtracting two lgamma values of
// size ~x ln x loses about log10(x ln x) digits, so large x goes through
// Stirling's series written in terms of log1p.
double log_gamma_ratio(double x, double s) {
  if (x < 64.0) return std::lgamma(x + s) - std::lgamma(x);
  const double y = x + s;
  const auto series = [](double z) {
    const double z2 = 1.0 / (z * z);
    return (1.0 / z) * (1.0 / 12.0 - z2 * (1.0 / 360.0 - z2 * (1.0 / 1260.0 - z2 / 1680.0)));
  };
  return (x - 0.5) * std::log1p(s / x) + s * std::log(y) - s + (series(y) - series(x));
}

}  // namespace

double log_beta_d(int k, std::uint64_t d) {
  require_recursion_domain(k, d);
  const auto c = KTreeConstants::of(k);
  const double x = static_cast<double>(d) - c.b / c.a;
  return -log_gamma_ratio(x, k / c.a + 1.0);
}

double beta_d(int k, std::uint64_t d) { return std::exp(log_beta_d(k, d)); }

double beta_sum(int k) {
  require(k > 2, "k must exceed 2");
  const auto c = KTreeConstants::of(k);
  // sum_{d>=d0} G(d+p)/G(d+q) = G(d0+p) / ((q-p-1) G(d0+q-1)), q-p-1 = k/a.
  const double x0 = (k - 1) - c.b / c.a;
  return (c.a / k) * std::exp(std::lgamma(x0) - std::lgamma(x0 + k / c.a));
}

double embeddedness_proportion(int k, std::uint64_t d) {
  return std::exp(log_beta_d(k, d) - std::log(beta_sum(k)));
}

double two_tree_law(int d) {
  require(d >= 1, "d must be at least 1");
  return std::pow(3.0, -d);
}

}  // namespace ktree::theory
