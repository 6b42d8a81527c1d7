#include "ktree/fitting.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "ktree/parse_error.hpp"

namespace ktree {
namespace {

struct Point {
  std::uint64_t value;
  std::uint64_t count;
  double x;  // log value
  double y;  // log proportion
};

std::vector<Point> log_points(const Histogram& h, std::uint64_t lo, std::uint64_t hi) {
  std::vector<Point> pts;
  const double total = static_cast<double>(h.total());
  for (auto it = h.counts().lower_bound(std::max<std::uint64_t>(lo, 1));
       it != h.counts().end() && it->first <= hi; ++it) {
    pts.push_back({it->first, it->second, std::log(static_cast<double>(it->first)),
                   std::log(static_cast<double>(it->second) / total)});
  }
  return pts;
}

struct LineFit {
  double slope = 0.0;
  double sse = 0.0;
  double r2 = 0.0;
};

LineFit least_squares(const Point* first, const Point* last) {
  const auto n = static_cast<double>(last - first);
  double mx = 0, my = 0;
  for (auto p = first; p != last; ++p) {
    mx += p->x;
    my += p->y;
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (auto p = first; p != last; ++p) {
    sxx += (p->x - mx) * (p->x - mx);
    sxy += (p->x - mx) * (p->y - my);
    syy += (p->y - my) * (p->y - my);
  }
  LineFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  // Residuals summed directly; syy - slope*sxy cancels badly on near-exact data.
  for (auto p = first; p != last; ++p) {
    const double r = p->y - (my + fit.slope * (p->x - mx));
    fit.sse += r * r;
  }
  fit.r2 = syy > 0 ? 1.0 - fit.sse / syy : 1.0;
  return fit;
}

double mle_exponent(const Point* first, const Point* last, std::uint64_t xmin) {
  const double shift = static_cast<double>(xmin) - 0.5;
  long double n = 0, s = 0;
  for (auto p = first; p != last; ++p) {
    n += p->count;
    s += static_cast<long double>(p->count) * std::log(static_cast<double>(p->value) / shift);
  }
  return static_cast<double>(1.0L + n / s);
}

Regime make_regime(const Point* first, const Point* last, std::uint64_t lo, std::uint64_t hi) {
  Regime r;
  r.lo = lo;
  r.hi = hi;
  r.points = static_cast<std::size_t>(last - first);
  for (auto p = first; p != last; ++p) r.samples += p->count;
  r.alpha_mle = mle_exponent(first, last, lo);
  const auto line = least_squares(first, last);
  r.alpha_ols = -line.slope;
  r.r2 = line.r2;
  r.sse = line.sse;
  return r;
}

}  // namespace

double RegimeFit::improvement() const {
  if (single_sse <= 0.0) return 0.0;
  return std::max(0.0, (single_sse - sse) / single_sse);
}

Regime fit_power_law(const Histogram& h, std::uint64_t xmin, std::uint64_t xmax) {
  if (xmin < 1) throw FitError("xmin must be at least 1 for a power-law fit");
  if (xmax < xmin) throw FitError("xmax must not be below xmin");
  const auto pts = log_points(h, xmin, xmax);
  if (pts.size() < kMinFitPoints) {
    throw FitError("insufficient support: " + std::to_string(pts.size()) +
                   " distinct values in [" + std::to_string(xmin) + ", " + std::to_string(xmax) +
                   "], need " + std::to_string(kMinFitPoints));
  }
  return make_regime(pts.data(), pts.data() + pts.size(), xmin, xmax + 1);
}

RegimeFit fit_two_regime(const Histogram& h) {
  const auto pts = log_points(h, 1, std::numeric_limits<std::uint64_t>::max());
  if (pts.size() < kMinTwoRegimePoints) {
    throw FitError("insufficient support: " + std::to_string(pts.size()) +
                   " distinct positive values, need " + std::to_string(kMinTwoRegimePoints));
  }
  const Point* begin = pts.data();
  const Point* end = begin + pts.size();

  RegimeFit fit;
  fit.method = FitMethod::kOls;
  fit.single_sse = least_squares(begin, end).sse;

  std::size_t best = 0;
  double best_sse = std::numeric_limits<double>::infinity();
  for (std::size_t i = kMinFitPoints; i + kMinFitPoints <= pts.size(); ++i) {
    const double sse = least_squares(begin, begin + i).sse + least_squares(begin + i, end).sse;
    if (sse < best_sse) {
      best_sse = sse;
      best = i;
    }
  }
  const std::uint64_t b = pts[best].value;
  fit.breakpoint = b;
  fit.regimes.push_back(make_regime(begin, begin + best, pts.front().value, b));
  fit.regimes.push_back(make_regime(begin + best, end, b, pts.back().value + 1));
  fit.sse = best_sse;
  return fit;
}

Histogram truncate_sparse_tail(const Histogram& h, std::uint64_t min_count) {
  Histogram out;
  for (const auto& [value, count] : h.counts()) {
    if (count < min_count) break;
    out.add(value, count);
  }
  return out;
}

double geometric_ratio(const Histogram& h, std::uint64_t dmin, std::uint64_t dmax) {
  if (dmax <= dmin) throw FitError("geometric ratio needs dmin < dmax");
  long double log_sum = 0;
  for (std::uint64_t d = dmin; d < dmax; ++d) {
    const auto a = h.count(d);
    const auto b = h.count(d + 1);
    if (a == 0 || b == 0) {
      throw FitError("missing value " + std::to_string(a == 0 ? d : d + 1) +
                     " in geometric ratio range");
    }
    log_sum += std::log(static_cast<long double>(b) / static_cast<long double>(a));
  }
  return static_cast<double>(std::exp(log_sum / static_cast<long double>(dmax - dmin)));
}

void write_fit_report(const std::vector<Regime>& regimes, std::ostream& out) {
  out << "regime_lo,regime_hi,alpha_mle,alpha_ols,r2,sse\n";
  for (const auto& r : regimes) {
    out << r.lo << ',' << r.hi << ',' << format_double(r.alpha_mle) << ','
        << format_double(r.alpha_ols) << ',' << format_double(r.r2) << ','
        << format_double(r.sse) << '\n';
  }
}

void write_fit_report(const std::vector<Regime>& regimes, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_fit_report(regimes, out);
}

std::vector<Regime> read_fit_report(std::istream& in) {
  std::vector<Regime> out;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!header) {
      if (line.rfind("regime_lo,", 0) != 0) throw ParseError(line_no, "missing fit report header");
      header = true;
      continue;
    }
    std::istringstream fields(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) throw ParseError(line_no, "expected 6 fields");
    try {
      Regime r;
      r.lo = std::stoull(cells[0]);
      r.hi = std::stoull(cells[1]);
      r.alpha_mle = std::stod(cells[2]);
      r.alpha_ols = std::stod(cells[3]);
      r.r2 = std::stod(cells[4]);
      r.sse = std::stod(cells[5]);
      out.push_back(r);
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "malformed number");
    }
  }
  if (!header) throw ParseError(line_no, "missing fit report header");
  return out;
}

std::vector<Regime> read_fit_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_fit_report(in);
}

void write_geometric_report(std::uint64_t dmin, std::uint64_t dmax, double ratio,
                            std::ostream& out) {
  out << "dmin,dmax,ratio\n" << dmin << ',' << dmax << ',' << format_double(ratio) << '\n';
}

}  // namespace ktree
