#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktree/generators.hpp"

namespace ktree::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitThreshold = 3;

/// Bad arguments, configuration or input files (exit code 2).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenerateOptions {
  std::string model = "ktree";
  int k = 3;
  int k1 = 3;
  int k2 = 12;
  int m = 3;
  std::uint64_t n = 1000;
  std::optional<std::uint64_t> r;
  std::optional<double> r_fraction;
  std::string probs;  // comma separated; empty selects the published 3..12 mixture
  std::uint64_t seed = 1;
  std::string out;
};

ModelSpec build_model_spec(const GenerateOptions& opts);
std::vector<double> parse_probs(const std::string& text);

struct AnalyzeOptions {
  std::string metric = "embeddedness";  // degree|embeddedness|clique-embeddedness|contact-strength
  int h = 3;
  int cap = 5;
  std::string in;
  std::string out;
  bool relabel = false;
  bool exclude_missing = false;
  unsigned workers = 1;
};

struct CommunitiesOptions {
  int k = 3;
  std::string in;
  std::string out;
  std::string summary;       // default: <out stem>_sizes.csv
  std::string dump_members;  // optional
  bool skip_single_clique = false;
  bool relabel = false;
};

struct SampleOptions {
  std::uint64_t steps = 0;
  std::optional<std::uint64_t> burn_in;  // default 10% of steps
  std::optional<std::uint32_t> start;
  std::uint64_t seed = 1;
  std::string in;
  std::string out;
};

struct FitOptions {
  std::string mode = "single";  // single|two-regime|geometric
  std::optional<std::uint64_t> xmin;
  std::optional<std::uint64_t> xmax;
  std::uint64_t min_count = 0;  // drop the tail from the first count below this
  std::string in;
  std::string out;  // empty: stdout
};

struct TheoryOptions {
  int k = 3;
  int h = 2;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> d;
  std::uint64_t dmax = 1000;
  std::string out;  // reference curve CSV, optional
};

int run_generate(const GenerateOptions& opts, std::ostream& log);
int run_analyze(const AnalyzeOptions& opts, std::ostream& log);
int run_communities(const CommunitiesOptions& opts, std::ostream& log);
int run_sample(const SampleOptions& opts, std::ostream& log);
int run_fit(const FitOptions& opts, std::ostream& out, std::ostream& log);
int run_theory(const TheoryOptions& opts, std::ostream& out, std::ostream& log);

/// Reference curve `d,beta_d,powerlaw` for d in [k-1, dmax] (k > 2), or the
/// 2-tree law 2*3^-d with an empty powerlaw column (k = 2).
void write_theory_curve(int k, std::uint64_t dmax, std::ostream& out);

}  // namespace ktree::cli
