#include "ktree/histogram.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ktree/parse_error.hpp"

namespace ktree {

void Histogram::add(std::uint64_t value, std::uint64_t count) {
  if (count == 0) return;
  counts_[value] += count;
  total_ += count;
}

void Histogram::merge(const Histogram& other) {
  for (const auto& [v, c] : other.counts_) add(v, c);
}

std::uint64_t Histogram::count(std::uint64_t value) const {
  auto it = counts_.find(value);
  return it == counts_.end() ? 0 : it->second;
}

double Histogram::proportion(std::uint64_t value) const {
  if (total_ == 0) return 0.0;
  return static_cast<double>(count(value)) / static_cast<double>(total_);
}

std::uint64_t Histogram::min_value() const {
  if (counts_.empty()) throw std::logic_error("min_value of empty histogram");
  return counts_.begin()->first;
}

std::uint64_t Histogram::max_value() const {
  if (counts_.empty()) throw std::logic_error("max_value of empty histogram");
  return counts_.rbegin()->first;
}

std::uint64_t Histogram::quantile(double q) const {
  if (counts_.empty()) throw std::logic_error("quantile of empty histogram");
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("quantile must lie in (0,1]");
  const double target = q * static_cast<double>(total_);
  std::uint64_t cumulative = 0;
  for (const auto& [v, c] : counts_) {
    cumulative += c;
    if (static_cast<double>(cumulative) >= target) return v;
  }
  return counts_.rbegin()->first;
}

double Histogram::mean() const {
  if (total_ == 0) return 0.0;
  long double s = 0;
  for (const auto& [v, c] : counts_) s += static_cast<long double>(v) * c;
  return static_cast<double>(s / total_);
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

void write_histogram_csv(const Histogram& h, std::ostream& out) {
  out << "value,count,proportion\n";
  for (const auto& [v, c] : h.counts()) {
    out << v << ',' << c << ',' << format_double(h.proportion(v)) << '\n';
  }
}

void write_histogram_csv(const Histogram& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_histogram_csv(h, out);
}

Histogram read_histogram_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  Histogram h;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line.rfind("value,count", 0) != 0) {
        throw ParseError(line_no, "expected header 'value,count,proportion'");
      }
      header = true;
      continue;
    }
    std::istringstream fields(line);
    std::string value, count;
    if (!std::getline(fields, value, ',') || !std::getline(fields, count, ',')) {
      throw ParseError(line_no, "expected 'value,count[,proportion]'");
    }
    std::uint64_t v = 0, c = 0;
    auto parse = [&](const std::string& s, std::uint64_t& out) {
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      if (ec != std::errc{} || p != s.data() + s.size()) {
        throw ParseError(line_no, "not a non-negative integer: '" + s + "'");
      }
    };
    parse(value, v);
    parse(count, c);
    if (h.count(v) != 0) throw ParseError(line_no, "duplicate value " + value);
    h.add(v, c);
  }
  if (!header) throw ParseError(line_no, "missing histogram header");
  return h;
}

Histogram read_histogram_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_histogram_csv(in);
}

}  // namespace ktree
