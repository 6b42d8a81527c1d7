#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "commands.hpp"

namespace ktree::cli {

/// A stage of a pipeline run failed; the message starts with "stage <name>: ".
class StageError : public std::runtime_error {
 public:
  StageError(const std::string& stage, const std::string& cause)
      : std::runtime_error("stage " + stage + ": " + cause), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct FitRequest {
  std::string metric;  // degree|embeddedness|clique-embeddedness
  std::string mode;    // single|two-regime|geometric
  friend bool operator==(const FitRequest&, const FitRequest&) = default;
};

/// Declarative run description. Text form is one `key=value` per line with
/// `#` comments; a `preset=<name>` line (first key only) loads a preset that
/// the following lines may override.
struct PipelineConfig {
  std::string preset;
  std::string model;  // ktree|mixed|partial|ba
  int k = 3;
  int k1 = 3;
  int k2 = 12;
  int m = 3;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> r;
  std::optional<double> r_fraction;
  std::string probs;
  std::uint64_t seed = 1;

  std::vector<std::string> metrics;
  int h = 3;
  std::vector<FitRequest> fits;
  std::optional<std::uint64_t> xmin;
  std::string xmax = "max";  // "max", "pNN" (quantile in percent) or a value
  std::optional<std::uint64_t> dmin;
  std::optional<std::uint64_t> dmax;
  std::uint64_t min_count = 0;
  std::optional<int> communities_k;
  bool skip_single_clique = false;

  std::optional<FitRequest> check;
  std::optional<double> check_exponent;
  std::optional<double> check_ratio;
  double check_tolerance = 0.0;

  std::string out_dir;

  /// Applies one key; throws ValidationError for unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
  bool empty() const { return model.empty(); }
};

PipelineConfig parse_pipeline_config(std::istream& in);
PipelineConfig parse_pipeline_config_file(const std::string& path);
PipelineConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();
/// Canonical text form; parsing it back yields an equal run. The manifest
/// leaves out_dir out so runs in different directories stay byte-identical.
std::string to_text(const PipelineConfig& cfg, bool include_out_dir = true);

struct CheckOutcome {
  std::string name;
  double value = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct PipelineResult {
  std::string out_dir;
  std::vector<std::string> artifacts;  // file names relative to out_dir
  std::optional<CheckOutcome> check;
  bool passed() const { return !check || check->passed; }
};

PipelineResult run_pipeline(const PipelineConfig& cfg, std::ostream& log);

struct CompareResult {
  std::vector<std::string> tables;  // joined histogram CSVs written
  std::uint64_t differences = 0;    // histogram rows whose counts differ
  std::optional<double> community_count_ratio;
};

/// Joins histogram CSVs present in both run directories and writes
/// `compare_<name>.csv` files plus `summary.csv` into out_dir.
CompareResult compare_runs(const std::string& run_a, const std::string& run_b,
                           const std::string& out_dir, std::ostream& log);

}  // namespace ktree::cli
