#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>

namespace ktree {

/// Integer-valued empirical distribution: value -> positive count.
class Histogram {
 public:
  using Map = std::map<std::uint64_t, std::uint64_t>;

  Histogram() = default;

  /// Adding a zero count is a no-op; zero entries are never stored.
  void add(std::uint64_t value, std::uint64_t count = 1);
  void merge(const Histogram& other);

  std::uint64_t count(std::uint64_t value) const;
  std::uint64_t total() const { return total_; }
  std::size_t distinct() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  const Map& counts() const { return counts_; }

  double proportion(std::uint64_t value) const;

  /// Requires a non-empty histogram.
  std::uint64_t min_value() const;
  std::uint64_t max_value() const;

  /// Smallest value v with P(X <= v) >= q, for q in (0,1].
  std::uint64_t quantile(double q) const;

  /// Count-weighted mean.
  double mean() const;

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  Map counts_;
  std::uint64_t total_ = 0;
};

template <class Range>
Histogram histogram_of(const Range& values) {
  Histogram h;
  for (auto v : values) h.add(static_cast<std::uint64_t>(v));
  return h;
}

/// CSV with header `value,count,proportion`, rows ascending by value.
void write_histogram_csv(const Histogram& h, std::ostream& out);
void write_histogram_csv(const Histogram& h, const std::string& path);

/// Parses the CSV written by write_histogram_csv. The proportion column is
/// ignored (it is derived); counts are authoritative.
Histogram read_histogram_csv(std::istream& in);
Histogram read_histogram_csv(const std::string& path);

/// Shortest decimal that round-trips the double.
std::string format_double(double x);

}  // namespace ktree
