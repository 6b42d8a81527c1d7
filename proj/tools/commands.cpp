#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ktree/communities.hpp"
#include "ktree/edge_list.hpp"
#include "ktree/fitting.hpp"
#include "ktree/histogram.hpp"
#include "ktree/metrics.hpp"
#include "ktree/sampling.hpp"
#include "ktree/theory.hpp"

namespace ktree::cli {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

LoadedGraph load_graph(const std::string& path, bool relabel) {
  require(!path.empty(), "--in is required");
  require(std::filesystem::exists(path), "input file not found: " + path);
  try {
    return read_edge_list(path, relabel);
  } catch (const ParseError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void maybe_write_id_map(const LoadedGraph& loaded, const std::string& out, std::ostream& log) {
  if (loaded.original_ids.empty()) return;
  const std::string path = out + ".idmap.csv";
  write_id_map(loaded.original_ids, path);
  log << "wrote id map " << path << '\n';
}

std::string sibling_path(const std::string& out, const std::string& suffix) {
  std::filesystem::path p(out);
  const auto stem = p.stem().string();
  return (p.parent_path() / (stem + suffix)).string();
}

}  // namespace

std::vector<double> parse_probs(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(cell, &used));
      require(used == cell.size(), "bad probability '" + cell + "'");
    } catch (const std::logic_error&) {
      throw ValidationError("bad probability '" + cell + "'");
    }
  }
  return out;
}

ModelSpec build_model_spec(const GenerateOptions& opts) {
  ModelSpec spec;
  spec.seed = opts.seed;
  if (opts.model == "ktree") {
    spec.model = KTreeModel{opts.k, opts.n};
  } else if (opts.model == "mixed") {
    auto probs = opts.probs.empty() ? default_mixed_probabilities() : parse_probs(opts.probs);
    spec.model = MixedKTreeModel{opts.k1, opts.k2, std::move(probs), opts.n};
  } else if (opts.model == "partial") {
    require(!(opts.r && opts.r_fraction), "give either --r or --r-fraction, not both");
    std::uint64_t r = opts.r.value_or(0);
    if (opts.r_fraction) {
      require(*opts.r_fraction >= 0.0 && *opts.r_fraction <= 1.0, "--r-fraction must be in [0,1]");
      require(opts.k >= 2 && opts.n >= static_cast<std::uint64_t>(opts.k), "n must be at least k");
      r = static_cast<std::uint64_t>(
          std::floor(*opts.r_fraction * static_cast<double>(theory::edge_count(opts.k, opts.n))));
    }
    spec.model = PartialKTreeModel{opts.k, opts.n, r};
  } else if (opts.model == "ba") {
    spec.model = BAModel{opts.m, opts.n};
  } else {
    throw ValidationError("unknown model '" + opts.model + "' (ktree|mixed|partial|ba)");
  }
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  return spec;
}

int run_generate(const GenerateOptions& opts, std::ostream& log) {
  require(!opts.out.empty(), "--out is required");
  const auto spec = build_model_spec(opts);
  const Graph g = generate(spec);
  auto header = describe(spec);
  header.insert(header.begin(), std::string("generator=ktree ") + kVersion);
  write_edge_list(g, opts.out, header);
  log << "wrote " << opts.out << " (" << g.num_vertices() << " vertices, " << g.num_edges()
      << " edges)\n";
  return kExitOk;
}

int run_analyze(const AnalyzeOptions& opts, std::ostream& log) {
  require(!opts.out.empty(), "--out is required");
  const auto loaded = load_graph(opts.in, opts.relabel);
  const Graph& g = loaded.graph;
  if (opts.metric == "degree") {
    write_histogram_csv(degree_distribution(g), opts.out);
  } else if (opts.metric == "embeddedness") {
    write_histogram_csv(embeddedness_distribution(g, opts.workers), opts.out);
  } else if (opts.metric == "clique-embeddedness") {
    try {
      write_histogram_csv(clique_embeddedness_distribution(g, opts.h, opts.cap), opts.out);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  } else if (opts.metric == "contact-strength") {
    const auto cs = contact_strength_by_embeddedness(
        g, opts.exclude_missing ? MissingWeight::kExclude : MissingWeight::kZero);
    if (cs.missing_weights > 0) {
      log << "warning: " << cs.missing_weights << " of " << g.num_edges()
          << " edges have no weight; "
          << (opts.exclude_missing ? "excluded" : "counted as weight 0") << '\n';
    }
    write_contact_strength_csv(cs, opts.out);
  } else {
    throw ValidationError("unknown metric '" + opts.metric +
                          "' (degree|embeddedness|clique-embeddedness|contact-strength)");
  }
  maybe_write_id_map(loaded, opts.out, log);
  log << "wrote " << opts.out << '\n';
  return kExitOk;
}

int run_communities(const CommunitiesOptions& opts, std::ostream& log) {
  require(!opts.out.empty(), "--out is required");
  require(opts.k >= 2, "--k must be at least 2");
  const auto loaded = load_graph(opts.in, opts.relabel);
  const auto cover = k_clique_communities(loaded.graph, opts.k);
  write_communities_csv(cover, opts.out, opts.skip_single_clique);
  const std::string summary =
      opts.summary.empty() ? sibling_path(opts.out, "_sizes.csv") : opts.summary;
  write_histogram_csv(community_size_distribution(cover, opts.skip_single_clique), summary);
  if (!opts.dump_members.empty()) write_community_members(cover, opts.dump_members);
  maybe_write_id_map(loaded, opts.out, log);
  log << cover.cliques.size() << " " << opts.k << "-cliques in " << cover.size()
      << " communities; wrote " << opts.out << " and " << summary << '\n';
  return kExitOk;
}

int run_sample(const SampleOptions& opts, std::ostream& log) {
  require(!opts.out.empty(), "--out is required");
  const auto loaded = load_graph(opts.in, false);
  WalkConfig cfg = WalkConfig::with_default_burn_in(opts.steps, opts.seed);
  if (opts.burn_in) cfg.burn_in = *opts.burn_in;
  if (opts.start) {
    require(*opts.start < loaded.graph.num_vertices(), "--start is not a vertex of the graph");
    cfg.start = *opts.start;
  }
  WalkResult walk;
  try {
    walk = mhrw_walk(loaded.graph, cfg);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  std::vector<std::string> header = {
      std::string("sampler=mhrw ktree ") + kVersion, "steps=" + std::to_string(cfg.steps),
      "burn_in=" + std::to_string(cfg.burn_in), "seed=" + std::to_string(cfg.seed),
      "rng=" + std::string(Rng::kAlgorithm), "source=" + opts.in};
  write_edge_list(walk.subgraph, opts.out, header);
  std::vector<std::uint64_t> ids(walk.sampled_vertices.begin(), walk.sampled_vertices.end());
  write_id_map(ids, opts.out + ".idmap.csv");
  log << "sampled " << walk.sampled_vertices.size() << " vertices, "
      << walk.subgraph.num_edges() << " edges; wrote " << opts.out << '\n';
  return kExitOk;
}

int run_fit(const FitOptions& opts, std::ostream& out, std::ostream& log) {
  require(!opts.in.empty(), "--in is required");
  Histogram h;
  try {
    h = read_histogram_csv(opts.in);
  } catch (const ParseError& e) {
    throw ValidationError(opts.in + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw ValidationError(e.what());
  }
  if (opts.min_count > 0) h = truncate_sparse_tail(h, opts.min_count);
  require(!h.empty(), "histogram is empty");

  std::ofstream file;
  std::ostream* sink = &out;
  if (!opts.out.empty()) {
    file.open(opts.out);
    require(static_cast<bool>(file), "cannot open " + opts.out + " for writing");
    sink = &file;
  }
  try {
    if (opts.mode == "single") {
      const auto xmin = opts.xmin.value_or(std::max<std::uint64_t>(1, h.min_value()));
      const auto xmax = opts.xmax.value_or(h.max_value());
      write_fit_report({fit_power_law(h, xmin, xmax)}, *sink);
    } else if (opts.mode == "two-regime") {
      const auto fit = fit_two_regime(h);
      write_fit_report(fit.regimes, *sink);
      log << "breakpoint " << *fit.breakpoint << ", single-regime sse "
          << format_double(fit.single_sse) << ", improvement " << format_double(fit.improvement())
          << '\n';
    } else if (opts.mode == "geometric") {
      require(opts.xmin && opts.xmax, "geometric mode needs --xmin and --xmax (d range)");
      write_geometric_report(*opts.xmin, *opts.xmax, geometric_ratio(h, *opts.xmin, *opts.xmax),
                             *sink);
    } else {
      throw ValidationError("unknown fit mode '" + opts.mode + "' (single|two-regime|geometric)");
    }
  } catch (const FitError& e) {
    throw ValidationError(e.what());
  }
  return kExitOk;
}

void write_theory_curve(int k, std::uint64_t dmax, std::ostream& out) {
  out << "d,beta_d,powerlaw\n";
  if (k == 2) {
    for (std::uint64_t d = 1; d <= dmax; ++d) {
      out << d << ',' << format_double(2.0 * theory::two_tree_law(static_cast<int>(d))) << ",\n";
    }
    return;
  }
  const double alpha = theory::embeddedness_exponent(k);
  const double log_norm = std::log(theory::beta_sum(k));
  for (std::uint64_t d = static_cast<std::uint64_t>(k - 1); d <= dmax; ++d) {
    out << d << ',' << format_double(theory::embeddedness_proportion(k, d)) << ','
        << format_double(std::exp(-alpha * std::log(static_cast<double>(d)) - log_norm)) << '\n';
  }
}

int run_theory(const TheoryOptions& opts, std::ostream& out, std::ostream& log) {
  require(opts.k >= 2, "--k must be at least 2");
  try {
    out << "k=" << opts.k << '\n';
    if (opts.k == 2) {
      out << "embeddedness_law=3^-d\n";
      for (int d = 1; d <= 6; ++d) out << "law(" << d << ")=" << format_double(theory::two_tree_law(d)) << '\n';
    } else {
      const auto c = theory::KTreeConstants::of(opts.k);
      out << "a_k=" << format_double(c.a) << "\nb_k=" << format_double(c.b) << '\n';
      out << "exponent(h=" << opts.h << ")=" << format_double(theory::embeddedness_exponent(opts.k, opts.h))
          << '\n';
    }
    if (opts.n) {
      out << "clique_count=" << theory::clique_count(opts.k, *opts.n) << '\n';
      out << "edge_count=" << theory::edge_count(opts.k, *opts.n) << '\n';
      if (opts.d && opts.k > 2) {
        const auto ratio = theory::triangle_ratio(opts.k, *opts.d, *opts.n);
        out << "cliques_containing_edge=" << ratio.numerator << '\n';
        out << "triangle_prob=" << ratio.numerator << '/' << ratio.denominator << '='
            << format_double(theory::triangle_prob(opts.k, *opts.d, *opts.n)) << '\n';
      }
    }
    if (opts.d && opts.k > 2) {
      out << "beta_d=" << format_double(theory::beta_d(opts.k, *opts.d)) << '\n';
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  if (!opts.out.empty()) {
    std::ofstream file(opts.out);
    require(static_cast<bool>(file), "cannot open " + opts.out + " for writing");
    write_theory_curve(opts.k, opts.dmax, file);
    log << "wrote " << opts.out << '\n';
  }
  return kExitOk;
}

}  // namespace ktree::cli
