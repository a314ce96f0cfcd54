#include "leja/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "leja/bounds.hpp"
#include "leja/csv.hpp"
#include "leja/fast_leja.hpp"
#include "leja/numeric.hpp"
#include "leja/optimize.hpp"

namespace leja {

double log_vdm(std::span<const double> points) {
  if (points.size() < 2) throw std::invalid_argument("log_vdm: need at least 2 points");
  CompensatedSum acc;
  for (size_t k = 1; k < points.size(); ++k) {
    for (size_t j = 0; j < k; ++j) {
      const double d = std::abs(points[k] - points[j]);
      if (d == 0.0) return neg_inf;
      acc.add(std::log(d));
    }
  }
  return acc.value();
}

double log_vdm(std::span<const std::complex<double>> points) {
  if (points.size() < 2) throw std::invalid_argument("log_vdm: need at least 2 points");
  CompensatedSum acc;
  for (size_t k = 1; k < points.size(); ++k) {
    for (size_t j = 0; j < k; ++j) {
      const double d = std::abs(points[k] - points[j]);
      if (d == 0.0) return neg_inf;
      acc.add(std::log(d));
    }
  }
  return acc.value();
}

namespace {

double dn_from_log(double lv, size_t n) {
  const double nn = static_cast<double>(n);
  return std::exp(2.0 * lv / (nn * (nn + 1.0)));
}

}  // namespace

double dn_root(std::span<const double> points) {
  return dn_from_log(log_vdm(points), points.size());
}

double dn_root(std::span<const std::complex<double>> points) {
  return dn_from_log(log_vdm(points), points.size());
}

double cheb_constant(Interval iv, int n) {
  if (n < 1) throw std::invalid_argument("cheb_constant: n must be >= 1");
  return std::exp(std::log(2.0) / n) * (iv.length() / 4.0);
}

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

/// ln|acc_product * d|; sticks at -inf once a zero factor appears.
double add_log_factor(double acc, double d) {
  if (d == 0.0 || acc == neg_inf) return neg_inf;
  return acc + std::log(std::abs(d));
}

/// Per-gap midpoint cache for the incremental sup-norm estimate on an
/// interval. ln|p| is strictly concave between consecutive zeros, so each
/// gap holds exactly one local maximum and the midpoint value is a cheap
/// stand-in that one golden-section pass upgrades to the true gap maximum.
struct GapCache {
  double lo = 0.0;
  double hi = 0.0;
  double mid = 0.0;
  CompensatedSum val;  // ln|p(mid)| over the current point set
};

class IntervalSupTracker {
 public:
  explicit IntervalSupTracker(Interval hull) : hull_(hull) {}

  void insert(double x) {
    edge_lo_ = add_log_factor(edge_lo_, hull_.a - x);
    edge_hi_ = add_log_factor(edge_hi_, hull_.b - x);
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
    const size_t pos = static_cast<size_t>(it - sorted_.begin());
    for (size_t g = 0; g < gaps_.size(); ++g) {
      if (g + 1 == pos) continue;  // the containing gap is rebuilt below
      gaps_[g].val.add(std::log(std::abs(gaps_[g].mid - x)));
    }
    const bool interior = pos > 0 && pos < sorted_.size();
    const double left = interior ? sorted_[pos - 1] : 0.0;
    const double right = interior ? sorted_[pos] : 0.0;
    sorted_.insert(it, x);
    if (interior) {
      gaps_[pos - 1] = fresh_gap(left, x);
      gaps_.insert(gaps_.begin() + static_cast<long>(pos), fresh_gap(x, right));
    } else if (sorted_.size() >= 2) {
      if (pos == 0) {
        gaps_.insert(gaps_.begin(), fresh_gap(x, sorted_[1]));
      } else {
        gaps_.push_back(fresh_gap(sorted_[sorted_.size() - 2], x));
      }
    }
  }

  /// Sup of ln|p| over the hull for the current point set.
  [[nodiscard]] double estimate(const GrowthOptions& opts) const {
    const std::span<const double> zeros(sorted_);
    if (static_cast<int>(sorted_.size()) < opts.full_scan_below) {
      return supnorm(zeros, hull_, 1e-12).log_value;
    }
    double best_mid = neg_inf;
    for (const GapCache& g : gaps_) best_mid = std::max(best_mid, g.val.value());

    std::vector<size_t> refine;
    for (size_t g = 0; g < gaps_.size(); ++g) {
      if (gaps_[g].val.value() >= best_mid - opts.refine_window) refine.push_back(g);
    }
    if (static_cast<int>(refine.size()) < opts.refine_top) {
      std::vector<size_t> order(gaps_.size());
      for (size_t g = 0; g < order.size(); ++g) order[g] = g;
      const size_t top = std::min<size_t>(opts.refine_top, order.size());
      std::partial_sort(order.begin(), order.begin() + static_cast<long>(top),
                        order.end(), [&](size_t a, size_t b) {
                          return gaps_[a].val.value() > gaps_[b].val.value();
                        });
      refine.assign(order.begin(), order.begin() + static_cast<long>(top));
    }

    double best = std::max({best_mid, edge_lo_, edge_hi_});
    for (size_t g : refine) {
      const GapCache& gap = gaps_[g];
      const double tol = std::max(1e-13, 1e-5 * (gap.hi - gap.lo));
      const auto [x, v] = golden_section_max(
          [&](double t) { return log_abs_product(zeros, t); }, gap.lo, gap.hi, tol);
      best = std::max(best, v);
    }
    return best;
  }

 private:
  [[nodiscard]] GapCache fresh_gap(double lo, double hi) const {
    GapCache g{lo, hi, 0.5 * (lo + hi), {}};
    for (double p : sorted_) g.val.add(std::log(std::abs(g.mid - p)));
    return g;
  }

  Interval hull_;
  std::vector<double> sorted_;
  std::vector<GapCache> gaps_;
  double edge_lo_ = 0.0;  // ln|p(hull.a)|
  double edge_hi_ = 0.0;  // ln|p(hull.b)|
};

}  // namespace

GrowthSeries growth_report(std::span<const std::complex<double>> points,
                           const DomainSpec& dom, std::span<const int> stages,
                           const GrowthOptions& opts) {
  const size_t total = points.size();
  if (total < 2) throw std::invalid_argument("growth_report: need at least 2 points");
  int prev_stage = 1;
  for (int s : stages) {
    if (s <= prev_stage) {
      throw std::invalid_argument("growth_report: stages must be strictly increasing");
    }
    if (static_cast<size_t>(s) > total) {
      throw std::invalid_argument("growth_report: stage beyond sequence length");
    }
    prev_stage = s;
  }

  const bool real_dom = dom.is_real();
  std::vector<double> xs;
  if (real_dom) {
    xs.resize(total);
    for (size_t i = 0; i < total; ++i) xs[i] = points[i].real();
  }

  IntervalSupTracker tracker(
      dom.is_interval() ? std::get<Interval>(dom.shape()) : Interval{});
  if (dom.is_interval()) tracker.insert(xs[0]);

  GrowthSeries series;
  series.rows.reserve(stages.size());
  CompensatedSum acc;
  size_t stage_idx = 0;

  for (size_t m = 1; m < total; ++m) {
    const int n = static_cast<int>(m) + 1;
    CompensatedSum step;
    for (size_t j = 0; j < m; ++j) {
      const double d = real_dom ? std::abs(xs[m] - xs[j]) : std::abs(points[m] - points[j]);
      if (d == 0.0) throw std::invalid_argument("growth_report: repeated point");
      step.add(std::log(d));
    }

    const CompensatedSum prev = acc;
    acc.add(step);
    const double residual = std::abs((acc.sum - prev.sum - step.sum) +
                                     ((acc.comp - prev.comp) - step.comp));
    if (n >= 3 && residual > series.max_telescope_residual) {
      series.max_telescope_residual = residual;
      series.argmax_residual_n = n;
    }

    if (stage_idx < stages.size() && stages[stage_idx] == n) {
      GrowthRow row;
      row.n = n;
      row.log_vdm = acc.value();
      row.dn_root = dn_from_log(row.log_vdm, static_cast<size_t>(n));
      row.step_log = step.value();
      row.telescope_residual = residual;
      if (!real_dom) {
        row.sup_log = nan_value;
        row.tau_ratio = nan_value;
        row.pseudo_growth = nan_value;
      } else {
        double sup = neg_inf;
        if (dom.is_interval()) {
          sup = tracker.estimate(opts);
        } else {
          const std::span<const double> zeros(xs.data(), m);
          for (const Interval& part : std::get<IntervalUnion>(dom.shape()).parts) {
            sup = std::max(sup, supnorm(zeros, part, 1e-12).log_value);
          }
        }
        row.sup_log = std::max(sup, row.step_log);
        row.tau_ratio = std::exp(row.step_log - row.sup_log);
        row.pseudo_growth = (row.sup_log - row.step_log) / static_cast<double>(n - 1);
      }
      series.rows.push_back(row);
      ++stage_idx;
      if (stage_idx == stages.size()) break;
    }

    if (dom.is_interval()) tracker.insert(xs[m]);
  }
  return series;
}

std::string growth_csv(const GrowthSeries& series) {
  std::ostringstream out;
  out << "n,log_vdm,dn_root,step_ratio,tau_ratio,pseudo_growth\n";
  for (const GrowthRow& r : series.rows) {
    out << r.n << ',' << format_double(r.log_vdm) << ',' << format_double(r.dn_root)
        << ',' << format_double(r.step_log) << ',' << format_double(r.tau_ratio)
        << ',' << format_double(r.pseudo_growth) << '\n';
  }
  return out.str();
}

Fig3Data fig3_data() {
  const DomainSpec dom{Interval{0.0, 1.0}};
  const LejaState state = generate(dom, 13, 0.5);
  const std::span<const double> nodes = state.insertion_order();

  const auto product = [&](double x) {
    double p = 1.0;
    for (double a : nodes) p *= x - a;
    return p;
  };

  Fig3Data data;
  data.xs.resize(2001);
  data.p13.resize(2001);
  for (int i = 0; i <= 2000; ++i) {
    data.xs[i] = static_cast<double>(i) / 2000.0;
    data.p13[i] = product(data.xs[i]);
  }
  for (double m : state.candidates()) {
    data.midpoints.push_back(m);
    data.twice_p13.push_back(2.0 * product(m));
  }
  return data;
}

std::string fig3_graph_csv(const Fig3Data& data) {
  std::ostringstream out;
  out << "x,p13\n";
  for (size_t i = 0; i < data.xs.size(); ++i) {
    out << format_double(data.xs[i]) << ',' << format_double(data.p13[i]) << '\n';
  }
  return out.str();
}

std::string fig3_circles_csv(const Fig3Data& data) {
  std::ostringstream out;
  out << "midpoint,2p13\n";
  for (size_t i = 0; i < data.midpoints.size(); ++i) {
    out << format_double(data.midpoints[i]) << ',' << format_double(data.twice_p13[i])
        << '\n';
  }
  return out.str();
}

}  // namespace leja
