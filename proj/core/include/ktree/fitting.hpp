#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktree/histogram.hpp"

namespace ktree {

/// Raised when a histogram does not carry enough support for the requested fit.
class FitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Minimum number of distinct values in any fitted range.
inline constexpr std::size_t kMinFitPoints = 5;
/// Minimum number of distinct values for a two-regime fit.
inline constexpr std::size_t kMinTwoRegimePoints = 12;

/// One power-law regime over the half-open value range [lo, hi).
struct Regime {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  double alpha_mle = 0.0;  // 1 + N / sum ln(x / (lo - 0.5))
  double alpha_ols = 0.0;  // minus the log-log slope of proportion against value
  double r2 = 0.0;         // of the log-log regression
  double sse = 0.0;        // residual sum of squares of the log-log regression
  std::uint64_t samples = 0;
  std::size_t points = 0;  // distinct values used
};

enum class FitMethod { kMle, kOls };

struct RegimeFit {
  std::vector<Regime> regimes;  // contiguous, ascending
  std::optional<std::uint64_t> breakpoint;
  FitMethod method = FitMethod::kOls;
  double sse = 0.0;         // total over regimes
  double single_sse = 0.0;  // one regime over the same points

  /// Relative SSE reduction against a single regime, in [0, 1].
  double improvement() const;
};

/// Power-law fit over values in [xmin, xmax]: discrete MLE with the
/// xmin - 0.5 continuity correction, plus log-log least squares on
/// proportions. xmin must be at least 1; zero-count values are skipped.
Regime fit_power_law(const Histogram& h, std::uint64_t xmin, std::uint64_t xmax);

/// Best two-piece log-log least-squares fit: every observed value with at
/// least five points on each side is tried as breakpoint and the one with
/// the smallest total SSE wins. Values below 1 are ignored.
RegimeFit fit_two_regime(const Histogram& h);

/// Leading part of `h`: values in ascending order up to (excluding) the first
/// value whose count is below `min_count`.
Histogram truncate_sparse_tail(const Histogram& h, std::uint64_t min_count);

/// Geometric mean of count(d+1)/count(d) for d in [dmin, dmax).
/// Every value in [dmin, dmax] must be present.
double geometric_ratio(const Histogram& h, std::uint64_t dmin, std::uint64_t dmax);

/// CSV `regime_lo,regime_hi,alpha_mle,alpha_ols,r2,sse`.
void write_fit_report(const std::vector<Regime>& regimes, std::ostream& out);
void write_fit_report(const std::vector<Regime>& regimes, const std::string& path);
std::vector<Regime> read_fit_report(std::istream& in);
std::vector<Regime> read_fit_report(const std::string& path);

/// CSV `dmin,dmax,ratio`.
void write_geometric_report(std::uint64_t dmin, std::uint64_t dmax, double ratio,
                            std::ostream& out);

}  // namespace ktree
