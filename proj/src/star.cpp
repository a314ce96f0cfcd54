#include "leja/star.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "leja/csv.hpp"

namespace leja {

namespace {

constexpr double kSlack = 1e-12;  // relative slack for separation comparisons

}  // namespace

ArrayRow sorted_prefix(std::span<const double> seq, int n) {
  if (n < 1 || static_cast<size_t>(n) > seq.size()) {
    throw std::invalid_argument("sorted_prefix: n out of range");
  }
  std::vector<double> pts(seq.begin(), seq.begin() + n);
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    throw std::invalid_argument("sorted_prefix: duplicate point in prefix");
  }
  return ArrayRow{std::move(pts)};
}

ArrayRow make_row(std::vector<double> points) {
  for (size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1] < points[i])) {
      throw std::invalid_argument("make_row: points not strictly increasing");
    }
  }
  return ArrayRow{std::move(points)};
}

StarReport star_metrics(const ArrayRow& row) {
  const int n = row.n();
  if (n < 2) throw std::invalid_argument("star_metrics: need at least 2 points");

  StarReport report;
  report.n = n;
  report.entries.reserve(n - 1);
  for (int j = 1; j < n; ++j) {
    const double left = row.points[j - 1];
    const double right = row.points[j];
    const double m = 0.5 * (left + right);
    const double s = m - left;
    double inv_sum = 0.0;
    for (int k = 0; k < n; ++k) inv_sum += 1.0 / std::abs(m - row.points[k]);
    const double h = static_cast<double>(n) / inv_sum;
    report.entries.push_back({j, m, s, h, s / h});
  }
  report.argmax_j = 1;
  report.max_ratio = report.entries.front().ratio;
  for (const StarEntry& e : report.entries) {
    if (e.ratio > report.max_ratio) {
      report.max_ratio = e.ratio;
      report.argmax_j = e.j;
    }
  }
  return report;
}

std::vector<std::pair<int, double>> star_trend(std::span<const double> seq,
                                               std::span<const int> stages) {
  std::vector<std::pair<int, double>> out;
  out.reserve(stages.size());
  int prev = 1;
  for (int n : stages) {
    if (n <= prev) throw std::invalid_argument("star_trend: stages not increasing");
    prev = n;
    out.emplace_back(n, star_metrics(sorted_prefix(seq, n)).max_ratio);
  }
  return out;
}

std::vector<double> dyadic_sequence(int count) {
  if (count < 0) throw std::invalid_argument("dyadic_sequence: negative count");
  std::vector<double> seq;
  seq.reserve(count);
  if (count > 0) seq.push_back(0.0);
  if (count > 1) seq.push_back(1.0);
  for (double denom = 2.0; static_cast<int>(seq.size()) < count; denom *= 2.0) {
    for (double num = 1.0; num < denom && static_cast<int>(seq.size()) < count;
         num += 2.0) {
      seq.push_back(num / denom);
    }
  }
  return seq;
}

double loglog_slope(std::span<const std::pair<int, double>> series) {
  if (series.size() < 2) {
    throw std::invalid_argument("loglog_slope: need at least 2 samples");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [n, v] : series) {
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(series.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

bool ExclusionSet::contains(double x) const {
  for (const Interval& iv : parts) {
    if (x >= iv.a && x <= iv.b) return true;
  }
  return false;
}

double ExclusionSet::total_length() const {
  double sum = 0.0;
  for (const Interval& iv : parts) sum += iv.length();
  return sum;
}

namespace {

void validate_constants(const SeparationConstants& c) {
  if (!(c.B1 > 0.0) || !(c.B2 > 0.0) || !(c.alpha1 > 0.0) || !(c.alpha2 > 0.0)) {
    throw std::invalid_argument("separation constants must be positive");
  }
  if (!(c.alpha2 <= c.alpha1 && c.alpha1 < 1.0 + c.alpha2)) {
    throw std::invalid_argument(
        "separation exponents must satisfy alpha2 <= alpha1 < 1 + alpha2");
  }
}

}  // namespace

SeparationFit separation_check(std::span<const ArrayRow> rows,
                               SeparationConstants constants,
                               const ExclusionSet& excluded, int n0) {
  validate_constants(constants);
  SeparationFit fit;
  fit.constants = constants;
  fit.excluded = excluded;
  fit.n0 = n0;
  fit.feasible = true;

  for (const ArrayRow& row : rows) {
    const int n = row.n();
    if (n < n0) continue;
    for (int j = 1; j <= n; ++j) {
      if (excluded.contains(static_cast<double>(j) / n)) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == j) continue;
        const double d = std::abs(row.points[j - 1] - row.points[k - 1]);
        const double t = std::abs(j - k) / static_cast<double>(n);
        const double lo = constants.B1 * std::pow(t, constants.alpha1);
        const double hi = constants.B2 * std::pow(t, constants.alpha2);
        if (d < lo * (1.0 - kSlack)) {
          fit.feasible = false;
          fit.first_violation = SeparationViolation{n, j, k, d, lo, true};
          return fit;
        }
        if (d > hi * (1.0 + kSlack)) {
          fit.feasible = false;
          fit.first_violation = SeparationViolation{n, j, k, d, hi, false};
          return fit;
        }
      }
    }
  }
  return fit;
}

SeparationConstants fit_separation(std::span<const ArrayRow> rows,
                                   const ExclusionSet& excluded, int n0) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  size_t count = 0;
  for (const ArrayRow& row : rows) {
    const int n = row.n();
    if (n < n0) continue;
    for (int j = 1; j <= n; ++j) {
      if (excluded.contains(static_cast<double>(j) / n)) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == j) continue;
        const double x = std::log(std::abs(j - k) / static_cast<double>(n));
        const double y = std::log(std::abs(row.points[j - 1] - row.points[k - 1]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
      }
    }
  }
  if (count < 2) throw std::invalid_argument("fit_separation: no index pairs");

  const double m = static_cast<double>(count);
  double alpha = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  alpha = std::clamp(alpha, 0.05, 3.0);

  double lo_ratio = std::numeric_limits<double>::infinity();
  double hi_ratio = 0.0;
  for (const ArrayRow& row : rows) {
    const int n = row.n();
    if (n < n0) continue;
    for (int j = 1; j <= n; ++j) {
      if (excluded.contains(static_cast<double>(j) / n)) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == j) continue;
        const double d = std::abs(row.points[j - 1] - row.points[k - 1]);
        const double t = std::abs(j - k) / static_cast<double>(n);
        const double r = d / std::pow(t, alpha);
        lo_ratio = std::min(lo_ratio, r);
        hi_ratio = std::max(hi_ratio, r);
      }
    }
  }
  return SeparationConstants{alpha, alpha, 0.5 * lo_ratio, 2.0 * hi_ratio};
}

double empirical_cdf_distance(const ArrayRow& row, TargetCdf target,
                              Interval support) {
  const int n = row.n();
  if (n < 1) throw std::invalid_argument("empirical_cdf_distance: empty row");
  const double len = support.length();
  double dist = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double x = row.points[i - 1];
    if (x < support.a || x > support.b) {
      throw std::invalid_argument("empirical_cdf_distance: point outside support");
    }
    const double u = (x - support.a) / len;
    double f = 0.0;
    switch (target) {
      case TargetCdf::arcsine:
        f = (2.0 / std::numbers::pi) * std::asin(std::sqrt(u));
        break;
      case TargetCdf::uniform:
        f = u;
        break;
    }
    dist = std::max(dist, std::abs(static_cast<double>(i) / n - f));
    dist = std::max(dist, std::abs(static_cast<double>(i - 1) / n - f));
  }
  return dist;
}

std::string star_csv(const StarReport& report) {
  std::ostringstream out;
  out << "n,j,midpoint,s,H,ratio\n";
  for (const StarEntry& e : report.entries) {
    out << report.n << ',' << e.j << ',' << format_double(e.midpoint) << ','
        << format_double(e.s) << ',' << format_double(e.H) << ','
        << format_double(e.ratio) << '\n';
  }
  out << "# max_ratio=" << format_double(report.max_ratio)
      << " argmax_j=" << report.argmax_j << '\n';
  return out.str();
}

std::string separation_json(const SeparationFit& fit) {
  nlohmann::ordered_json j;
  j["schema_version"] = "1";
  j["alpha1"] = fit.constants.alpha1;
  j["alpha2"] = fit.constants.alpha2;
  j["B1"] = fit.constants.B1;
  j["B2"] = fit.constants.B2;
  j["J"] = nlohmann::ordered_json::array();
  for (const Interval& iv : fit.excluded.parts) {
    j["J"].push_back({iv.a, iv.b});
  }
  j["n0"] = fit.n0;
  j["feasible"] = fit.feasible;
  if (fit.first_violation) {
    const SeparationViolation& v = *fit.first_violation;
    j["first_violation"] = {{"n", v.n},
                            {"j", v.j},
                            {"k", v.k},
                            {"distance", v.distance},
                            {"bound", v.bound},
                            {"side", v.lower ? "lower" : "upper"}};
  } else {
    j["first_violation"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace leja
