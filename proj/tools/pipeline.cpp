#include "pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "ktree/communities.hpp"
#include "ktree/edge_list.hpp"
#include "ktree/fitting.hpp"
#include "ktree/generators.hpp"
#include "ktree/histogram.hpp"
#include "ktree/metrics.hpp"
#include "ktree/parse_error.hpp"
#include "ktree/rng.hpp"

namespace fs = std::filesystem;

namespace ktree::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, sep)) {
    cell = trim(cell);
    if (!cell.empty()) out.push_back(cell);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* first = value.data();
  const char* last = first + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw ValidationError("bad value for " + key + ": '" + value + "'");
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used == value.size() && std::isfinite(x)) return x;
  } catch (const std::logic_error&) {
  }
  throw ValidationError("bad value for " + key + ": '" + value + "'");
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ValidationError("bad value for " + key + ": '" + value + "' (true|false)");
}

const std::set<std::string> kHistogramMetrics = {"degree", "embeddedness", "clique-embeddedness"};
const std::set<std::string> kMetrics = {"degree", "embeddedness", "clique-embeddedness",
                                        "contact-strength"};
const std::set<std::string> kFitModes = {"single", "two-regime", "geometric"};

FitRequest parse_fit_request(const std::string& key, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ValidationError(key + " entries take the form metric:mode, got '" + text + "'");
  }
  FitRequest req{trim(text.substr(0, colon)), trim(text.substr(colon + 1))};
  if (!kHistogramMetrics.count(req.metric)) {
    throw ValidationError(key + ": metric '" + req.metric + "' has no histogram to fit");
  }
  if (!kFitModes.count(req.mode)) {
    throw ValidationError(key + ": unknown fit mode '" + req.mode + "'");
  }
  return req;
}

std::string file_stem(const std::string& metric) {
  std::string s = metric;
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

std::string histogram_file(const std::string& metric, int h) {
  if (metric == "clique-embeddedness") return "clique_embeddedness_h" + std::to_string(h) + ".csv";
  return file_stem(metric) + ".csv";
}

std::string fit_file(const FitRequest& req) {
  return "fit_" + file_stem(req.metric) + "_" + file_stem(req.mode) + ".csv";
}

using PresetTable = std::map<std::string, std::vector<std::pair<std::string, std::string>>>;

const PresetTable& presets() {
  static const PresetTable table = {
      {"theorem1-k4",
       {{"model", "ktree"}, {"k", "4"}, {"n", "100000"}, {"seed", "1"},
        {"metrics", "embeddedness"}, {"fit", "embeddedness:single"}, {"xmin", "20"},
        {"xmax", "max"}, {"check_metric", "embeddedness:single"}, {"check_exponent", "3.0"},
        {"check_tolerance", "0.3"}}},
      {"theorem2-2tree",
       {{"model", "ktree"}, {"k", "2"}, {"n", "100000"}, {"seed", "1"},
        {"metrics", "embeddedness"}, {"fit", "embeddedness:geometric"}, {"dmin", "1"},
        {"dmax", "6"}, {"check_metric", "embeddedness:geometric"},
        {"check_ratio", "0.3333333333333333"}, {"check_tolerance", "0.03"}}},
      {"theorem3-k5h3",
       {{"model", "ktree"}, {"k", "5"}, {"n", "50000"}, {"seed", "1"},
        {"metrics", "clique-embeddedness"}, {"h", "3"}, {"fit", "clique-embeddedness:single"},
        {"xmin", "3"}, {"xmax", "max"}, {"check_metric", "clique-embeddedness:single"},
        {"check_exponent", "3.5"}, {"check_tolerance", "0.4"}}},
      {"fig5-ktree3",
       {{"model", "ktree"}, {"k", "3"}, {"n", "100000"}, {"seed", "1"},
        {"metrics", "degree,embeddedness"}, {"fit", "degree:single,embeddedness:single"},
        {"xmin", "20"}}},
      {"fig5-ba3",
       {{"model", "ba"}, {"m", "3"}, {"n", "100000"}, {"seed", "1"},
        {"metrics", "degree,embeddedness"}, {"fit", "degree:single"}, {"xmin", "10"}}},
      {"fig67-mixed",
       {{"model", "mixed"}, {"k1", "3"}, {"k2", "12"}, {"n", "100000"}, {"seed", "1"},
        {"metrics", "degree,embeddedness"},
        {"fit", "degree:two-regime,embeddedness:two-regime"}, {"min_count", "10"}}},
      {"fig8-ba",
       {{"model", "ba"}, {"m", "4"}, {"n", "2000"}, {"seed", "1"}, {"metrics", "degree,embeddedness"},
        {"communities_k", "5"}}},
      {"fig9-partial4tree",
       {{"model", "partial"}, {"k", "4"}, {"n", "2000"}, {"r_fraction", "0.05"}, {"seed", "1"},
        {"metrics", "degree,embeddedness"}, {"communities_k", "5"}}},
  };
  return table;
}

/// FNV-1a over the file bytes; the manifest uses it to pin artifact contents.
std::uint64_t file_digest(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[1 << 14];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  return hash;
}

template <typename F>
auto run_stage(const std::string& name, std::ostream& log, F&& body) {
  log << "[" << name << "]\n";
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

GenerateOptions generate_options(const PipelineConfig& cfg) {
  GenerateOptions g;
  g.model = cfg.model;
  g.k = cfg.k;
  g.k1 = cfg.k1;
  g.k2 = cfg.k2;
  g.m = cfg.m;
  g.n = cfg.n;
  g.r = cfg.r;
  g.r_fraction = cfg.r_fraction;
  g.probs = cfg.probs;
  g.seed = cfg.seed;
  return g;
}

std::uint64_t resolve_xmax(const std::string& spec, const Histogram& h) {
  if (spec == "max") return h.max_value();
  if (!spec.empty() && spec[0] == 'p') {
    const double pct = parse_real("xmax", spec.substr(1));
    return h.quantile(pct / 100.0);
  }
  return parse_number<std::uint64_t>("xmax", spec);
}

void validate_config(const PipelineConfig& cfg) {
  if (cfg.empty()) throw ValidationError("empty pipeline config: set model= or preset=");
  if (cfg.out_dir.empty()) throw ValidationError("pipeline config needs out_dir (or --out)");
  build_model_spec(generate_options(cfg));
  for (const auto& f : cfg.fits) {
    if (std::find(cfg.metrics.begin(), cfg.metrics.end(), f.metric) == cfg.metrics.end()) {
      throw ValidationError("fit " + f.metric + ":" + f.mode + " needs metric " + f.metric +
                            " in metrics");
    }
    if (f.mode == "geometric" && (!cfg.dmin || !cfg.dmax)) {
      throw ValidationError("geometric fit needs dmin and dmax");
    }
  }
  if (cfg.check) {
    if (std::find(cfg.fits.begin(), cfg.fits.end(), *cfg.check) == cfg.fits.end()) {
      throw ValidationError("check_metric must name one of the fit entries");
    }
    if (cfg.check->mode == "two-regime") {
      throw ValidationError("check_metric cannot target a two-regime fit");
    }
    const bool geometric = cfg.check->mode == "geometric";
    if (geometric ? !cfg.check_ratio : !cfg.check_exponent) {
      throw ValidationError(geometric ? "geometric check needs check_ratio"
                                      : "single-fit check needs check_exponent");
    }
    if (cfg.check_tolerance <= 0) throw ValidationError("check_tolerance must be positive");
  }
  if (cfg.communities_k && *cfg.communities_k < 2) {
    throw ValidationError("communities_k must be at least 2");
  }
}

}  // namespace

void PipelineConfig::set(const std::string& key, const std::string& value) {
  if (key == "preset") {
    if (!presets().count(value)) throw ValidationError("unknown preset '" + value + "'");
    *this = preset_config(value);
  } else if (key == "model") {
    model = value;
  } else if (key == "k") {
    k = parse_number<int>(key, value);
  } else if (key == "k1") {
    k1 = parse_number<int>(key, value);
  } else if (key == "k2") {
    k2 = parse_number<int>(key, value);
  } else if (key == "m") {
    m = parse_number<int>(key, value);
  } else if (key == "n") {
    n = parse_number<std::uint64_t>(key, value);
  } else if (key == "r") {
    r = parse_number<std::uint64_t>(key, value);
  } else if (key == "r_fraction") {
    r_fraction = parse_real(key, value);
  } else if (key == "probs") {
    probs = value;
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "metrics") {
    metrics = split(value, ',');
    for (const auto& m : metrics) {
      if (!kMetrics.count(m)) throw ValidationError("unknown metric '" + m + "'");
    }
  } else if (key == "h") {
    h = parse_number<int>(key, value);
  } else if (key == "fit") {
    fits.clear();
    for (const auto& item : split(value, ',')) fits.push_back(parse_fit_request(key, item));
  } else if (key == "xmin") {
    xmin = parse_number<std::uint64_t>(key, value);
  } else if (key == "xmax") {
    if (value != "max" && !(value.size() > 1 && value[0] == 'p')) {
      parse_number<std::uint64_t>(key, value);
    }
    xmax = value;
  } else if (key == "dmin") {
    dmin = parse_number<std::uint64_t>(key, value);
  } else if (key == "dmax") {
    dmax = parse_number<std::uint64_t>(key, value);
  } else if (key == "min_count") {
    min_count = parse_number<std::uint64_t>(key, value);
  } else if (key == "communities_k") {
    communities_k = parse_number<int>(key, value);
  } else if (key == "skip_single_clique") {
    skip_single_clique = parse_bool(key, value);
  } else if (key == "check_metric") {
    check = parse_fit_request(key, value);
  } else if (key == "check_exponent") {
    check_exponent = parse_real(key, value);
  } else if (key == "check_ratio") {
    check_ratio = parse_real(key, value);
  } else if (key == "check_tolerance") {
    check_tolerance = parse_real(key, value);
  } else if (key == "out_dir") {
    out_dir = value;
  } else {
    throw ValidationError("unknown config key '" + key + "'");
  }
}

PipelineConfig parse_pipeline_config(std::istream& in) {
  PipelineConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  bool any_key = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "preset" && any_key) {
      throw ValidationError("config line " + std::to_string(line_no) +
                            ": preset must be the first key");
    }
    try {
      cfg.set(key, value);
    } catch (const ValidationError& e) {
      throw ValidationError("config line " + std::to_string(line_no) + ": " + e.what());
    }
    any_key = true;
  }
  return cfg;
}

PipelineConfig parse_pipeline_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config " + path);
  return parse_pipeline_config(in);
}

PipelineConfig preset_config(const std::string& name) {
  const auto it = presets().find(name);
  if (it == presets().end()) throw ValidationError("unknown preset '" + name + "'");
  PipelineConfig cfg;
  for (const auto& [key, value] : it->second) cfg.set(key, value);
  cfg.preset = name;
  return cfg;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : presets()) out.push_back(name);
  return out;
}

std::string to_text(const PipelineConfig& cfg, bool include_out_dir) {
  std::ostringstream out;
  auto join = [](const auto& items, auto fmt) {
    std::string s;
    for (const auto& item : items) s += (s.empty() ? "" : ",") + fmt(item);
    return s;
  };
  out << "model=" << cfg.model << '\n';
  if (cfg.model == "mixed") {
    out << "k1=" << cfg.k1 << "\nk2=" << cfg.k2 << '\n';
    if (!cfg.probs.empty()) out << "probs=" << cfg.probs << '\n';
  } else if (cfg.model == "ba") {
    out << "m=" << cfg.m << '\n';
  } else {
    out << "k=" << cfg.k << '\n';
  }
  out << "n=" << cfg.n << '\n';
  if (cfg.r) out << "r=" << *cfg.r << '\n';
  if (cfg.r_fraction) out << "r_fraction=" << format_double(*cfg.r_fraction) << '\n';
  out << "seed=" << cfg.seed << '\n';
  out << "metrics=" << join(cfg.metrics, [](const std::string& s) { return s; }) << '\n';
  out << "h=" << cfg.h << '\n';
  out << "fit="
      << join(cfg.fits, [](const FitRequest& f) { return f.metric + ":" + f.mode; }) << '\n';
  if (cfg.xmin) out << "xmin=" << *cfg.xmin << '\n';
  out << "xmax=" << cfg.xmax << '\n';
  if (cfg.dmin) out << "dmin=" << *cfg.dmin << '\n';
  if (cfg.dmax) out << "dmax=" << *cfg.dmax << '\n';
  out << "min_count=" << cfg.min_count << '\n';
  if (cfg.communities_k) out << "communities_k=" << *cfg.communities_k << '\n';
  out << "skip_single_clique=" << (cfg.skip_single_clique ? "true" : "false") << '\n';
  if (cfg.check) out << "check_metric=" << cfg.check->metric << ':' << cfg.check->mode << '\n';
  if (cfg.check_exponent) out << "check_exponent=" << format_double(*cfg.check_exponent) << '\n';
  if (cfg.check_ratio) out << "check_ratio=" << format_double(*cfg.check_ratio) << '\n';
  if (cfg.check) out << "check_tolerance=" << format_double(cfg.check_tolerance) << '\n';
  if (include_out_dir) out << "out_dir=" << cfg.out_dir << '\n';
  return out.str();
}

PipelineResult run_pipeline(const PipelineConfig& cfg, std::ostream& log) {
  validate_config(cfg);
  const fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw ValidationError("cannot create output directory " + cfg.out_dir);
  }
  {
    const auto probe = dir / "manifest.txt";
    std::ofstream touch(probe, std::ios::app);
    if (!touch) throw ValidationError("output directory " + cfg.out_dir + " is not writable");
  }

  PipelineResult result;
  result.out_dir = cfg.out_dir;
  auto add_artifact = [&](const std::string& name) { result.artifacts.push_back(name); };

  const ModelSpec spec = build_model_spec(generate_options(cfg));
  const Graph g = run_stage("generate", log, [&] {
    Graph graph = generate(spec);
    auto header = describe(spec);
    header.insert(header.begin(), std::string("generator=ktree ") + kVersion);
    write_edge_list(graph, (dir / "graph.edgelist").string(), header);
    add_artifact("graph.edgelist");
    log << "  " << graph.num_vertices() << " vertices, " << graph.num_edges() << " edges\n";
    return graph;
  });

  std::map<std::string, Histogram> histograms;
  for (const auto& metric : cfg.metrics) {
    run_stage("analyze " + metric, log, [&] {
      if (metric == "contact-strength") {
        write_contact_strength_csv(contact_strength_by_embeddedness(g),
                                   (dir / "contact_strength.csv").string());
        add_artifact("contact_strength.csv");
        return;
      }
      Histogram h;
      if (metric == "degree") {
        h = degree_distribution(g);
      } else if (metric == "embeddedness") {
        h = embeddedness_distribution(g);
      } else {
        h = clique_embeddedness_distribution(g, cfg.h);
      }
      const auto name = histogram_file(metric, cfg.h);
      write_histogram_csv(h, (dir / name).string());
      add_artifact(name);
      histograms[metric] = std::move(h);
    });
  }

  if (cfg.communities_k) {
    run_stage("communities", log, [&] {
      const int ck = *cfg.communities_k;
      const auto cover = k_clique_communities(g, ck);
      const auto members = "communities_k" + std::to_string(ck) + ".csv";
      const auto sizes = "community_sizes_k" + std::to_string(ck) + ".csv";
      write_communities_csv(cover, (dir / members).string(), cfg.skip_single_clique);
      write_histogram_csv(community_size_distribution(cover, cfg.skip_single_clique),
                          (dir / sizes).string());
      add_artifact(members);
      add_artifact(sizes);
      log << "  " << cover.cliques.size() << " " << ck << "-cliques, " << cover.size()
          << " communities\n";
    });
  }

  for (const auto& req : cfg.fits) {
    run_stage("fit " + req.metric + ":" + req.mode, log, [&] {
      // Fit from the CSV on disk so the run exercises the same ingestion path as `ktree fit`.
      Histogram h = read_histogram_csv((dir / histogram_file(req.metric, cfg.h)).string());
      if (cfg.min_count > 0) h = truncate_sparse_tail(h, cfg.min_count);
      if (h.empty()) throw FitError("histogram is empty");
      const auto name = fit_file(req);
      std::ofstream out(dir / name);
      double value = 0.0;
      if (req.mode == "single") {
        const auto xmin = cfg.xmin.value_or(std::max<std::uint64_t>(1, h.min_value()));
        const auto regime = fit_power_law(h, xmin, resolve_xmax(cfg.xmax, h));
        write_fit_report({regime}, out);
        value = regime.alpha_mle;
        log << "  alpha_mle=" << format_double(regime.alpha_mle)
            << " alpha_ols=" << format_double(regime.alpha_ols) << '\n';
      } else if (req.mode == "two-regime") {
        const auto fit = fit_two_regime(h);
        write_fit_report(fit.regimes, out);
        log << "  breakpoint=" << *fit.breakpoint
            << " improvement=" << format_double(fit.improvement()) << '\n';
      } else {
        value = geometric_ratio(h, *cfg.dmin, *cfg.dmax);
        write_geometric_report(*cfg.dmin, *cfg.dmax, value, out);
        log << "  ratio=" << format_double(value) << '\n';
      }
      if (!out) throw std::runtime_error("cannot write " + name);
      add_artifact(name);
      if (cfg.check && *cfg.check == req) {
        CheckOutcome c;
        c.name = req.metric + ":" + req.mode;
        c.value = value;
        c.target = req.mode == "geometric" ? *cfg.check_ratio : *cfg.check_exponent;
        c.tolerance = cfg.check_tolerance;
        c.passed = std::abs(c.value - c.target) <= c.tolerance;
        result.check = c;
      }
    });
  }

  if (cfg.model == "ktree") {
    run_stage("theory", log, [&] {
      std::uint64_t dmax = 1000;
      if (auto it = histograms.find("embeddedness"); it != histograms.end()) {
        dmax = std::max<std::uint64_t>(it->second.max_value(), static_cast<std::uint64_t>(cfg.k));
      }
      std::ofstream out(dir / "theory.csv");
      write_theory_curve(cfg.k, dmax, out);
      if (!out) throw std::runtime_error("cannot write theory.csv");
      add_artifact("theory.csv");
    });
  }

  run_stage("manifest", log, [&] {
    std::ofstream out(dir / "manifest.txt", std::ios::trunc);
    out << "ktree_version=" << kVersion << '\n';
    out << "rng=" << Rng::kAlgorithm << '\n';
    if (!cfg.preset.empty()) out << "preset=" << cfg.preset << '\n';
    out << "[config]\n" << to_text(cfg, false);
    out << "[model]\n";
    for (const auto& line : describe(spec)) out << line << '\n';
    out << "[artifacts]\n";
    for (const auto& name : result.artifacts) {
      out << name << ' ' << fs::file_size(dir / name) << " fnv1a64=" << std::hex
          << std::setw(16) << std::setfill('0') << file_digest(dir / name) << std::dec
          << std::setfill(' ') << '\n';
    }
    if (result.check) {
      const auto& c = *result.check;
      out << "[check]\n"
          << c.name << " value=" << format_double(c.value) << " target=" << format_double(c.target)
          << " tolerance=" << format_double(c.tolerance) << " result="
          << (c.passed ? "pass" : "fail") << '\n';
    }
    if (!out) throw std::runtime_error("cannot write manifest.txt");
  });
  return result;
}

namespace {

bool is_histogram_file(const std::string& name) {
  if (name == "degree.csv" || name == "embeddedness.csv") return true;
  return (name.rfind("clique_embeddedness_h", 0) == 0 || name.rfind("community_sizes_k", 0) == 0) &&
         name.size() > 4 && name.substr(name.size() - 4) == ".csv";
}

std::map<std::string, fs::path> list_files(const std::string& run, bool (*keep)(const std::string&)) {
  if (!fs::is_directory(run)) throw ValidationError("not a run directory: " + run);
  std::map<std::string, fs::path> out;
  for (const auto& entry : fs::directory_iterator(run)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && keep(name)) out[name] = entry.path();
  }
  return out;
}

bool is_fit_file(const std::string& name) {
  return name.rfind("fit_", 0) == 0 && name.size() > 4 && name.substr(name.size() - 4) == ".csv";
}

/// Named numbers from a fit report (power-law or geometric layout).
std::vector<std::pair<std::string, double>> fit_values(const fs::path& path) {
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  std::vector<std::pair<std::string, double>> out;
  if (header.rfind("dmin,", 0) == 0) {
    std::string row;
    std::getline(in, row);
    const auto cells = split(row, ',');
    if (cells.size() != 3) throw ValidationError("malformed geometric report " + path.string());
    out.emplace_back("ratio", parse_real("ratio", cells[2]));
    return out;
  }
  in.seekg(0);
  const auto regimes = read_fit_report(in);
  for (std::size_t i = 0; i < regimes.size(); ++i) {
    const auto tag = "regime" + std::to_string(i + 1);
    out.emplace_back(tag + ".alpha_mle", regimes[i].alpha_mle);
    out.emplace_back(tag + ".alpha_ols", regimes[i].alpha_ols);
  }
  return out;
}

void summary_row(std::ostream& out, const std::string& item, double a, double b) {
  out << item << ',' << format_double(a) << ',' << format_double(b) << ',';
  if (b != 0.0) out << format_double(a / b);
  out << '\n';
}

}  // namespace

CompareResult compare_runs(const std::string& run_a, const std::string& run_b,
                           const std::string& out_dir, std::ostream& log) {
  const auto hist_a = list_files(run_a, is_histogram_file);
  const auto hist_b = list_files(run_b, is_histogram_file);
  std::vector<std::string> common;
  for (const auto& [name, _] : hist_a) {
    if (hist_b.count(name)) common.push_back(name);
  }
  for (const auto& [name, _] : hist_a) {
    if (!hist_b.count(name)) log << "only in " << run_a << ": " << name << '\n';
  }
  for (const auto& [name, _] : hist_b) {
    if (!hist_a.count(name)) log << "only in " << run_b << ": " << name << '\n';
  }
  if (common.empty()) {
    throw ValidationError("incompatible runs: no histogram CSV is present in both directories");
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) {
    throw ValidationError("cannot create output directory " + out_dir);
  }

  CompareResult result;
  std::ofstream summary(fs::path(out_dir) / "summary.csv");
  if (!summary) throw ValidationError("cannot write summary.csv in " + out_dir);
  summary << "item,run_a,run_b,ratio\n";

  for (const auto& name : common) {
    Histogram a, b;
    try {
      a = read_histogram_csv(hist_a.at(name).string());
      b = read_histogram_csv(hist_b.at(name).string());
    } catch (const ParseError& e) {
      throw ValidationError(name + ": " + e.what());
    }
    const auto table = "compare_" + name;
    std::ofstream out(fs::path(out_dir) / table);
    out << "value,count_a,proportion_a,count_b,proportion_b,proportion_diff\n";
    std::set<std::uint64_t> values;
    for (const auto& [v, _] : a.counts()) values.insert(v);
    for (const auto& [v, _] : b.counts()) values.insert(v);
    std::uint64_t diffs = 0;
    for (const auto v : values) {
      const double pa = a.proportion(v), pb = b.proportion(v);
      out << v << ',' << a.count(v) << ',' << format_double(pa) << ',' << b.count(v) << ','
          << format_double(pb) << ',' << format_double(pa - pb) << '\n';
      if (a.count(v) != b.count(v)) ++diffs;
    }
    result.tables.push_back(table);
    result.differences += diffs;

    const auto stem = name.substr(0, name.size() - 4);
    const bool sizes = stem.rfind("community_sizes_k", 0) == 0;
    if (sizes) {
      summary_row(summary, stem + ".community_count", static_cast<double>(a.total()),
                  static_cast<double>(b.total()));
      summary_row(summary, stem + ".max_community_size",
                  a.empty() ? 0.0 : static_cast<double>(a.max_value()),
                  b.empty() ? 0.0 : static_cast<double>(b.max_value()));
      if (b.total() > 0) {
        result.community_count_ratio =
            static_cast<double>(a.total()) / static_cast<double>(b.total());
      }
    } else {
      summary_row(summary, stem + ".total", static_cast<double>(a.total()),
                  static_cast<double>(b.total()));
      summary_row(summary, stem + ".max", a.empty() ? 0.0 : static_cast<double>(a.max_value()),
                  b.empty() ? 0.0 : static_cast<double>(b.max_value()));
      summary_row(summary, stem + ".mean", a.mean(), b.mean());
    }
    summary_row(summary, stem + ".distinct", static_cast<double>(a.distinct()),
                static_cast<double>(b.distinct()));
    summary_row(summary, stem + ".differing_values", static_cast<double>(diffs),
                static_cast<double>(diffs));
  }

  const auto fits_a = list_files(run_a, is_fit_file);
  const auto fits_b = list_files(run_b, is_fit_file);
  for (const auto& [name, path_a] : fits_a) {
    const auto it = fits_b.find(name);
    if (it == fits_b.end()) continue;
    try {
      const auto va = fit_values(path_a);
      const auto vb = fit_values(it->second);
      const auto stem = name.substr(0, name.size() - 4);
      for (std::size_t i = 0; i < std::min(va.size(), vb.size()); ++i) {
        summary_row(summary, stem + "." + va[i].first, va[i].second, vb[i].second);
      }
    } catch (const ParseError& e) {
      throw ValidationError(name + ": " + e.what());
    }
  }
  summary_row(summary, "differences", static_cast<double>(result.differences),
              static_cast<double>(result.differences));
  log << result.tables.size() << " histogram tables compared, " << result.differences
      << " differing values\n";
  if (result.community_count_ratio) {
    log << "community count ratio " << format_double(*result.community_count_ratio) << '\n';
  }
  return result;
}

}  // namespace ktree::cli
