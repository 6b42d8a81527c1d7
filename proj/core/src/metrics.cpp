#include "ktree/metrics.hpp"

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "ktree/cliques.hpp"

namespace ktree {

std::uint64_t edge_embeddedness(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("{" + std::to_string(u) + "," + std::to_string(v) +
                                "} is not an edge");
  }
  return count_common(g.neighbors(u), g.neighbors(v));
}

std::vector<EmbeddednessRecord> embeddedness_records(const Graph& g) {
  std::vector<EmbeddednessRecord> out;
  out.reserve(g.num_edges());
  g.for_each_edge([&](Vertex u, Vertex v) {
    out.push_back({{u, v}, count_common(g.neighbors(u), g.neighbors(v)), g.weight(u, v)});
  });
  return out;
}

Histogram degree_distribution(const Graph& g) {
  Histogram h;
  for (Vertex v = 0; v < g.num_vertices(); ++v) h.add(g.degree(v));
  return h;
}

namespace {

// Each edge is handled once, from its lower-degree endpoint (ties by id).
void embeddedness_range(const Graph& g, Vertex begin, Vertex end, Histogram& out) {
  std::vector<std::uint64_t> local;
  for (Vertex u = begin; u < end; ++u) {
    const auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      const auto nv = g.neighbors(v);
      const bool owner = nu.size() < nv.size() || (nu.size() == nv.size() && u < v);
      if (!owner) continue;
      const auto emb = count_common(nu, nv);
      if (emb >= local.size()) local.resize(emb + 1, 0);
      ++local[emb];
    }
  }
  for (std::size_t value = 0; value < local.size(); ++value) out.add(value, local[value]);
}

}  // namespace

Histogram embeddedness_distribution(const Graph& g, unsigned workers) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  if (workers <= 1 || n < 2 * workers) {
    Histogram h;
    embeddedness_range(g, 0, n, h);
    return h;
  }
  std::vector<Histogram> partial(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const Vertex begin = static_cast<Vertex>(std::uint64_t{n} * w / workers);
      const Vertex end = static_cast<Vertex>(std::uint64_t{n} * (w + 1) / workers);
      threads.emplace_back([&g, &partial, w, begin, end] {
        embeddedness_range(g, begin, end, partial[w]);
      });
    }
  }
  Histogram h;
  for (const auto& p : partial) h.merge(p);
  return h;
}

Histogram clique_embeddedness_distribution(const Graph& g, int h, int cap) {
  if (h < 2) throw std::invalid_argument("clique size h must be at least 2");
  if (h > cap) {
    throw std::invalid_argument("clique size h=" + std::to_string(h) + " exceeds the cap of " +
                                std::to_string(cap));
  }
  if (h == 2) return embeddedness_distribution(g);
  Histogram out;
  std::vector<Vertex> common;
  std::vector<Vertex> scratch;
  for_each_clique(g, h, [&](std::span<const Vertex> clique) {
    const auto first = g.neighbors(clique[0]);
    common.assign(first.begin(), first.end());
    for (std::size_t i = 1; i < clique.size() && !common.empty(); ++i) {
      detail::intersect_into(common, g.neighbors(clique[i]), scratch);
      common.swap(scratch);
    }
    out.add(common.size());
  });
  return out;
}

ContactStrength contact_strength_by_embeddedness(const Graph& g, MissingWeight policy) {
  struct Acc {
    long double sum = 0;
    std::uint64_t count = 0;
  };
  std::map<std::uint64_t, Acc> by_emb;
  ContactStrength result;
  g.for_each_edge([&](Vertex u, Vertex v) {
    const auto w = g.weight(u, v);
    if (!w) {
      ++result.missing_weights;
      if (policy == MissingWeight::kExclude) return;
    }
    auto& acc = by_emb[count_common(g.neighbors(u), g.neighbors(v))];
    acc.sum += w.value_or(0);
    ++acc.count;
  });
  for (const auto& [emb, acc] : by_emb) {
    result.rows.push_back({emb, static_cast<double>(acc.sum / acc.count), acc.count});
  }
  return result;
}

void write_contact_strength_csv(const ContactStrength& cs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "embeddedness,mean_weight,edge_count\n";
  for (const auto& row : cs.rows) {
    out << row.embeddedness << ',' << format_double(row.mean_weight) << ',' << row.edge_count
        << '\n';
  }
}

std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto hu = detail::higher_neighbors(g, u);
    for (Vertex v : hu) total += count_common(hu, detail::higher_neighbors(g, v));
  }
  return total;
}

}  // namespace ktree
