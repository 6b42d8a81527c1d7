#include "cli_app.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "commands.hpp"
#include "ktree/histogram.hpp"
#include "pipeline.hpp"

namespace ktree::cli {
namespace {

template <typename T>
void optional_option(CLI::App* app, const std::string& name, std::optional<T>& target,
                     const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random k-tree generation, higher-order structure metrics and power-law fitting",
               "ktree"};
  // Only the long help flag: "-h" would clash with the --h clique-size option.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // Commands without randomness still accept --seed so scripts can pass it uniformly.
  std::uint64_t unused_seed = 0;

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Generate a random graph and write it as an edge list");
  g->add_option("--model", gen.model, "ktree | mixed | partial | ba")
      ->check(CLI::IsMember({"ktree", "mixed", "partial", "ba"}))
      ->capture_default_str();
  g->add_option("--k", gen.k, "clique size (ktree, partial)")->capture_default_str();
  g->add_option("--k1", gen.k1, "smallest attachment size (mixed)")->capture_default_str();
  g->add_option("--k2", gen.k2, "largest attachment size (mixed)")->capture_default_str();
  g->add_option("--m", gen.m, "edges per new vertex (ba)")->capture_default_str();
  g->add_option("--n", gen.n, "number of vertices")->capture_default_str();
  optional_option(g, "--r", gen.r, "edges removed (partial)");
  optional_option(g, "--r-fraction", gen.r_fraction, "fraction of edges removed (partial)");
  g->add_option("--probs", gen.probs, "comma-separated size probabilities for k1..k2 (mixed)");
  g->add_option("--seed", gen.seed, "random seed")->capture_default_str();
  g->add_option("--out", gen.out, "output edge list")->required();

  AnalyzeOptions an;
  auto* a = app.add_subcommand("analyze", "Compute a metric histogram from an edge list");
  a->add_option("--metric", an.metric, "degree | embeddedness | clique-embeddedness | contact-strength")
      ->check(CLI::IsMember({"degree", "embeddedness", "clique-embeddedness", "contact-strength"}))
      ->capture_default_str();
  a->add_option("--h", an.h, "clique size for clique-embeddedness")->capture_default_str();
  a->add_option("--cap", an.cap, "largest h accepted")->capture_default_str();
  a->add_option("--in", an.in, "input edge list")->required();
  a->add_option("--out", an.out, "output CSV")->required();
  a->add_flag("--relabel", an.relabel, "compact vertex ids and write <out>.idmap.csv");
  a->add_flag("--exclude-missing", an.exclude_missing,
              "contact-strength: skip unweighted edges instead of counting weight 0");
  a->add_option("--workers", an.workers, "threads for embeddedness")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  a->add_option("--seed", unused_seed, "accepted for uniformity; analysis is deterministic");

  CommunitiesOptions co;
  auto* c = app.add_subcommand("communities", "k-clique percolation communities");
  c->add_option("--k", co.k, "clique size")->capture_default_str();
  c->add_option("--in", co.in, "input edge list")->required();
  c->add_option("--out", co.out, "community CSV (community_id,size)")->required();
  c->add_option("--summary", co.summary, "size histogram CSV (default <out stem>_sizes.csv)");
  c->add_option("--dump-members", co.dump_members, "write member vertex lists to this file");
  c->add_flag("--skip-single-clique", co.skip_single_clique,
              "leave out communities made of one clique");
  c->add_flag("--relabel", co.relabel, "compact vertex ids and write <out>.idmap.csv");
  c->add_option("--seed", unused_seed, "accepted for uniformity; percolation is deterministic");

  SampleOptions sa;
  auto* s = app.add_subcommand("sample", "Metropolis-Hastings random walk sample");
  s->add_option("--steps", sa.steps, "walk length")->required();
  optional_option(s, "--burn-in", sa.burn_in, "steps discarded (default 10% of steps)");
  optional_option(s, "--start", sa.start, "start vertex (default random non-isolated)");
  s->add_option("--seed", sa.seed, "random seed")->capture_default_str();
  s->add_option("--in", sa.in, "input edge list")->required();
  s->add_option("--out", sa.out, "sampled induced subgraph")->required();

  FitOptions fi;
  auto* f = app.add_subcommand("fit", "Fit a histogram CSV");
  f->add_option("--mode", fi.mode, "single | two-regime | geometric")
      ->check(CLI::IsMember({"single", "two-regime", "geometric"}))
      ->capture_default_str();
  optional_option(f, "--xmin", fi.xmin, "lower bound (geometric: first d)");
  optional_option(f, "--xmax", fi.xmax, "upper bound (geometric: last d)");
  f->add_option("--min-count", fi.min_count, "drop the tail from the first count below this");
  f->add_option("--in", fi.in, "histogram CSV")->required();
  f->add_option("--out", fi.out, "report CSV (default stdout)");
  f->add_option("--seed", unused_seed, "accepted for uniformity; fitting is deterministic");

  TheoryOptions th;
  auto* t = app.add_subcommand("theory", "Closed-form values and reference curve");
  t->add_option("--k", th.k, "k")->capture_default_str();
  t->add_option("--h", th.h, "clique size for the exponent")->capture_default_str();
  optional_option(t, "--n", th.n, "number of vertices");
  optional_option(t, "--d", th.d, "edge embeddedness");
  t->add_option("--dmax", th.dmax, "last d of the reference curve")->capture_default_str();
  t->add_option("--out", th.out, "reference curve CSV (d,beta_d,powerlaw)");
  t->add_option("--seed", unused_seed, "accepted for uniformity; theory is deterministic");

  std::string preset, config_path, pipe_out;
  std::optional<std::uint64_t> pipe_seed;
  bool list_presets = false;
  auto* p = app.add_subcommand("pipeline", "Run an end-to-end experiment");
  p->add_option("--preset", preset, "named experiment");
  p->add_option("--config", config_path, "key=value config file");
  p->add_option("--out", pipe_out, "output directory (overrides out_dir)");
  optional_option(p, "--seed", pipe_seed, "overrides the config seed");
  p->add_flag("--list-presets", list_presets, "print preset names");

  std::string run_a, run_b, cmp_out;
  auto* cm = app.add_subcommand("compare", "Compare two pipeline output directories");
  cm->add_option("run_a", run_a, "first run directory")->required();
  cm->add_option("run_b", run_b, "second run directory")->required();
  cm->add_option("--out", cmp_out, "output directory")->required();
  cm->add_option("--seed", unused_seed, "accepted for uniformity; comparison is deterministic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*g) return run_generate(gen, err);
    if (*a) return run_analyze(an, err);
    if (*c) return run_communities(co, err);
    if (*s) return run_sample(sa, err);
    if (*f) return run_fit(fi, out, err);
    if (*t) return run_theory(th, out, err);
    if (*p) {
      if (list_presets) {
        for (const auto& name : preset_names()) out << name << '\n';
        return kExitOk;
      }
      PipelineConfig cfg;
      if (!preset.empty() && !config_path.empty()) {
        throw ValidationError("give either --preset or --config, not both");
      }
      if (!preset.empty()) {
        cfg = preset_config(preset);
        cfg.out_dir = "run-" + preset;
      } else if (!config_path.empty()) {
        cfg = parse_pipeline_config_file(config_path);
      } else {
        throw ValidationError("pipeline needs --preset or --config");
      }
      if (!pipe_out.empty()) cfg.out_dir = pipe_out;
      if (pipe_seed) cfg.seed = *pipe_seed;
      const auto result = run_pipeline(cfg, err);
      out << "wrote " << result.artifacts.size() << " artifacts to " << result.out_dir << '\n';
      if (result.check) {
        const auto& ch = *result.check;
        out << "check " << ch.name << ": " << format_double(ch.value) << " vs "
            << format_double(ch.target) << " +/- " << format_double(ch.tolerance) << " -> "
            << (ch.passed ? "PASS" : "FAIL") << '\n';
      }
      return result.passed() ? kExitOk : kExitThreshold;
    }
    if (*cm) {
      compare_runs(run_a, run_b, cmp_out, err);
      out << "wrote " << cmp_out << "/summary.csv\n";
      return kExitOk;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("ktree");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ktree::cli
