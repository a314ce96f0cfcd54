#include "leja/fast_leja.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "leja/optimize.hpp"

namespace leja {

namespace {

constexpr double tie_tol = 1e-12;

double wrap_unit(double x) { return x - std::floor(x); }

}  // namespace

double LejaState::score_term(double cand, std::complex<double> cand_geom, double point,
                             std::complex<double> point_geom) const {
  if (dom_.is_curve()) {
    const double d = std::abs(cand_geom - point_geom);
    if (d == 0.0) throw std::logic_error("candidate coincides with a selected point");
    return std::log(d);
  }
  const double d = std::abs(cand - point);
  if (d == 0.0) throw std::logic_error("candidate coincides with a selected point");
  return std::log(d);
}

CompensatedSum LejaState::fresh_score(double cand, std::complex<double> cand_geom) const {
  CompensatedSum s;
  for (std::size_t j = 0; j < insertion_.size(); ++j) {
    const std::complex<double> pg =
        dom_.is_curve() ? insertion_geom_[j] : std::complex<double>{};
    s.add(score_term(cand, cand_geom, insertion_[j], pg));
  }
  return s;
}

double LejaState::to_geometric_log(const CompensatedSum& score) const {
  if (const auto* iv = std::get_if<Interval>(&dom_.shape())) {
    return score.value() + static_cast<double>(insertion_.size()) * std::log(iv->length());
  }
  return score.value();
}

std::vector<double> LejaState::candidate_log_values() const {
  std::vector<double> out;
  out.reserve(scores_.size());
  for (const auto& s : scores_) out.push_back(to_geometric_log(s));
  return out;
}

double LejaState::parameter_of(double coord) const {
  if (const auto* u = std::get_if<IntervalUnion>(&dom_.shape())) {
    const double total = u->total_length();
    double acc = 0.0;
    for (const auto& p : u->parts) {
      if (coord <= p.b) return (acc + (coord - p.a)) / total;
      acc += p.length();
    }
    return 1.0;
  }
  return coord;
}

std::complex<double> LejaState::point_of(double coord) const {
  if (const auto* iv = std::get_if<Interval>(&dom_.shape())) {
    return {iv->a + iv->length() * coord, 0.0};
  }
  if (dom_.is_union()) return {coord, 0.0};
  return dom_.map_param(coord);
}

std::vector<double> LejaState::insertion_parameters() const {
  std::vector<double> out;
  out.reserve(insertion_.size());
  for (double c : insertion_) out.push_back(parameter_of(c));
  return out;
}

std::vector<std::complex<double>> LejaState::insertion_points() const {
  std::vector<std::complex<double>> out;
  out.reserve(insertion_.size());
  for (std::size_t j = 0; j < insertion_.size(); ++j) {
    out.push_back(dom_.is_curve() ? insertion_geom_[j] : point_of(insertion_[j]));
  }
  return out;
}

void LejaState::add_point(double coord) {
  insertion_.push_back(coord);
  if (dom_.is_curve()) insertion_geom_.push_back(dom_.map_param(coord));
  sorted_.insert(std::lower_bound(sorted_.begin(), sorted_.end(), coord), coord);
}

void LejaState::insert_candidate(double coord) {
  const std::complex<double> geom = dom_.is_curve() ? dom_.map_param(coord)
                                                    : std::complex<double>{};
  const auto pos = std::lower_bound(cands_.begin(), cands_.end(), coord);
  const auto idx = static_cast<std::size_t>(pos - cands_.begin());
  cands_.insert(pos, coord);
  scores_.insert(scores_.begin() + static_cast<std::ptrdiff_t>(idx),
                 fresh_score(coord, geom));
  if (dom_.is_curve()) {
    cand_geom_.insert(cand_geom_.begin() + static_cast<std::ptrdiff_t>(idx), geom);
  }
}

StepResult LejaState::step() {
  if (cands_.empty()) throw std::logic_error("no candidates left to select");

  std::size_t best = 0;
  double best_val = scores_[0].value();
  for (std::size_t i = 1; i < cands_.size(); ++i) {
    const double v = scores_[i].value();
    if (v > best_val + tie_tol) {
      best = i;
      best_val = v;
    }
  }

  const double chosen = cands_[best];
  const double chosen_log = to_geometric_log(scores_[best]);
  const std::complex<double> chosen_geom =
      dom_.is_curve() ? cand_geom_[best] : std::complex<double>{};

  cands_.erase(cands_.begin() + static_cast<std::ptrdiff_t>(best));
  scores_.erase(scores_.begin() + static_cast<std::ptrdiff_t>(best));
  if (dom_.is_curve()) {
    cand_geom_.erase(cand_geom_.begin() + static_cast<std::ptrdiff_t>(best));
  }

  // neighbors of the selected point among the current points
  const auto pos = std::lower_bound(sorted_.begin(), sorted_.end(), chosen);
  const auto idx = static_cast<std::size_t>(pos - sorted_.begin());
  double left = 0.0, right = 0.0;
  if (dom_.is_closed_curve()) {
    left = idx == 0 ? sorted_.back() - 1.0 : sorted_[idx - 1];
    right = idx == sorted_.size() ? sorted_.front() + 1.0 : sorted_[idx];
  } else {
    if (idx == 0 || idx == sorted_.size()) {
      throw std::logic_error("selected candidate outside the point hull");
    }
    left = sorted_[idx - 1];
    right = sorted_[idx];
  }

  add_point(chosen);

  // one new ln-distance term per surviving candidate
  for (std::size_t i = 0; i < cands_.size(); ++i) {
    const std::complex<double> cg = dom_.is_curve() ? cand_geom_[i] : std::complex<double>{};
    scores_[i].add(score_term(cands_[i], cg, chosen, chosen_geom));
  }

  double m1 = 0.5 * (left + chosen);
  double m2 = 0.5 * (chosen + right);
  if (dom_.is_closed_curve()) {
    m1 = wrap_unit(m1);
    m2 = wrap_unit(m2);
  }
  for (double m : {m1, m2}) {
    if (std::binary_search(sorted_.begin(), sorted_.end(), m)) {
      throw std::logic_error("gap too small to split");
    }
    insert_candidate(m);
  }
  return {chosen, chosen_log};
}

void LejaState::validate_open_arc() const {
  if (cands_.size() + 1 != sorted_.size()) {
    throw std::logic_error("open arc needs exactly one candidate per gap");
  }
  for (std::size_t k = 0; k < cands_.size(); ++k) {
    if (!(sorted_[k] < cands_[k] && cands_[k] < sorted_[k + 1])) {
      throw std::logic_error("candidate not interlaced with its gap");
    }
  }
}

void LejaState::validate_union() const {
  const auto& parts = std::get<IntervalUnion>(dom_.shape()).parts;
  std::size_t pi = 0, ci = 0;
  for (const auto& part : parts) {
    std::size_t npts = 0;
    const std::size_t first_pt = pi;
    while (pi < sorted_.size() && sorted_[pi] <= part.b) {
      if (sorted_[pi] < part.a) throw std::logic_error("point outside every part");
      ++pi;
      ++npts;
    }
    if (npts < 2 || sorted_[first_pt] != part.a || sorted_[pi - 1] != part.b) {
      throw std::logic_error("part endpoints must stay selected");
    }
    for (std::size_t k = 0; k + 1 < npts; ++k) {
      if (ci >= cands_.size() ||
          !(sorted_[first_pt + k] < cands_[ci] && cands_[ci] < sorted_[first_pt + k + 1])) {
        throw std::logic_error("candidate not interlaced with its gap");
      }
      ++ci;
    }
  }
  if (pi != sorted_.size() || ci != cands_.size()) {
    throw std::logic_error("stray point or candidate outside the union parts");
  }
}

void LejaState::validate_closed() const {
  if (cands_.size() != sorted_.size()) {
    throw std::logic_error("closed curve needs as many candidates as points");
  }
  const std::size_t P = sorted_.size();
  for (std::size_t k = 0; k + 1 < P; ++k) {
    const auto lo = std::upper_bound(cands_.begin(), cands_.end(), sorted_[k]);
    const auto hi = std::lower_bound(cands_.begin(), cands_.end(), sorted_[k + 1]);
    if (hi - lo != 1) throw std::logic_error("gap without exactly one candidate");
  }
  // wrap-around gap
  const std::size_t before_first =
      static_cast<std::size_t>(std::lower_bound(cands_.begin(), cands_.end(), sorted_.front()) -
                               cands_.begin());
  const std::size_t after_last =
      cands_.size() -
      static_cast<std::size_t>(std::upper_bound(cands_.begin(), cands_.end(), sorted_.back()) -
                               cands_.begin());
  if (before_first + after_last != 1) {
    throw std::logic_error("wrap-around gap without exactly one candidate");
  }
}

void LejaState::validate() const {
  if (insertion_.size() != sorted_.size()) {
    throw std::logic_error("insertion order and sorted points disagree in size");
  }
  std::vector<double> copy = insertion_;
  std::sort(copy.begin(), copy.end());
  if (copy != sorted_) {
    throw std::logic_error("insertion order is not a permutation of the sorted points");
  }
  for (std::size_t k = 1; k < sorted_.size(); ++k) {
    if (!(sorted_[k - 1] < sorted_[k])) throw std::logic_error("duplicate point");
  }
  for (std::size_t k = 1; k < cands_.size(); ++k) {
    if (!(cands_[k - 1] < cands_[k])) throw std::logic_error("duplicate candidate");
  }
  for (double c : cands_) {
    if (std::binary_search(sorted_.begin(), sorted_.end(), c)) {
      throw std::logic_error("candidate coincides with a point");
    }
  }
  if (dom_.is_closed_curve()) {
    validate_closed();
  } else if (dom_.is_union()) {
    validate_union();
  } else {
    validate_open_arc();
  }
}

LejaState init_state(const DomainSpec& dom, double s1) {
  if (!(s1 > 0.0 && s1 < 1.0)) {
    throw std::invalid_argument("s1 must lie in (0, 1)");
  }
  LejaState st(dom);
  if (const auto* u = std::get_if<IntervalUnion>(&dom.shape())) {
    for (const auto& p : u->parts) {
      st.add_point(p.a);
      st.add_point(p.b);
    }
    for (const auto& p : u->parts) st.insert_candidate(0.5 * (p.a + p.b));
    return st;
  }
  if (dom.is_closed_curve()) {
    st.add_point(0.0);
    st.insert_candidate(s1);
    return st;
  }
  st.add_point(0.0);
  st.add_point(1.0);
  st.insert_candidate(s1);
  return st;
}

LejaState generate(const DomainSpec& dom, std::size_t n, double s1) {
  LejaState st = init_state(dom, s1);
  if (n < st.size()) {
    throw std::invalid_argument("requested fewer points than the initial configuration");
  }
  while (st.size() < n) st.step();
  return st;
}

std::vector<double> generate_real(const DomainSpec& dom, std::size_t n, double s1) {
  if (!dom.is_real()) {
    throw std::invalid_argument("real point extraction needs an interval or union domain");
  }
  const LejaState st = generate(dom, n, s1);
  std::vector<double> out;
  out.reserve(n);
  for (double c : st.insertion_order()) out.push_back(st.point_of(c).real());
  return out;
}

double log_abs_poly(std::span<const double> params, const DomainSpec& dom, double x) {
  const std::complex<double> zx = dom.map_param(x);
  CompensatedSum s;
  for (double t : params) {
    if (t == x) return neg_inf;
    const double d = std::abs(zx - dom.map_param(t));
    if (d == 0.0) return neg_inf;
    s.add(std::log(d));
  }
  return s.value();
}

namespace {

struct ScanGrid {
  std::vector<double> coords;           // internal coordinates
  std::vector<std::size_t> part_index;  // for unions: part of each coord
};

ScanGrid build_scan_grid(const DomainSpec& dom, std::size_t grid) {
  ScanGrid g;
  if (const auto* u = std::get_if<IntervalUnion>(&dom.shape())) {
    const double total = u->total_length();
    for (std::size_t pi = 0; pi < u->parts.size(); ++pi) {
      const auto& p = u->parts[pi];
      const auto m = std::max<std::size_t>(
          2, static_cast<std::size_t>(std::lround(static_cast<double>(grid) * p.length() / total)));
      for (std::size_t i = 0; i < m; ++i) {
        g.coords.push_back(p.a + p.length() * static_cast<double>(i) /
                                      static_cast<double>(m - 1));
        g.part_index.push_back(pi);
      }
    }
    return g;
  }
  if (dom.is_closed_curve()) {
    for (std::size_t i = 0; i < grid; ++i) {
      g.coords.push_back(static_cast<double>(i) / static_cast<double>(grid));
    }
    return g;
  }
  for (std::size_t i = 0; i < grid; ++i) {
    g.coords.push_back(static_cast<double>(i) / static_cast<double>(grid - 1));
  }
  return g;
}

}  // namespace

std::vector<double> true_leja(const DomainSpec& dom, std::size_t n, std::size_t grid) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  if (grid < 10 * n) throw std::invalid_argument("scan grid must have at least 10 n points");

  const ScanGrid scan = build_scan_grid(dom, grid);
  const bool curve = dom.is_curve();

  std::vector<double> pts;           // coordinates, insertion order
  std::vector<double> pts_real;      // geometric, real domains
  std::vector<std::complex<double>> pts_geom;  // geometric, curves

  auto geom_of = [&](double c) -> std::complex<double> {
    if (curve) return dom.map_param(c);
    if (dom.is_union()) return {c, 0.0};
    const auto& iv = std::get<Interval>(dom.shape());
    return {iv.a + iv.length() * c, 0.0};
  };
  auto log_p = [&](double c) -> double {
    if (curve) return log_abs_product(pts_geom, dom.map_param(c));
    return log_abs_product(std::span<const double>(pts_real), geom_of(c).real());
  };
  auto push = [&](double c) {
    pts.push_back(c);
    if (curve) {
      pts_geom.push_back(geom_of(c));
    } else {
      pts_real.push_back(geom_of(c).real());
    }
  };

  push(dom.is_union() ? std::get<IntervalUnion>(dom.shape()).parts.front().a : 0.0);

  std::vector<double> vals(scan.coords.size());
  while (pts.size() < n) {
    double top = neg_inf;
    for (std::size_t i = 0; i < scan.coords.size(); ++i) {
      vals[i] = log_p(scan.coords[i]);
      top = std::max(top, vals[i]);
    }
    // smallest coordinate among grid samples tied with the max
    std::size_t best = 0;
    while (best + 1 < vals.size() && !(vals[best] > top - 1e-9)) ++best;
    double best_val = vals[best];

    // bracket the best cell, staying inside the same part / wrapping on
    // closed curves
    double lo = 0.0, hi = 0.0;
    const std::size_t m = scan.coords.size();
    if (dom.is_closed_curve()) {
      lo = best == 0 ? scan.coords.back() - 1.0 : scan.coords[best - 1];
      hi = best + 1 == m ? scan.coords.front() + 1.0 : scan.coords[best + 1];
    } else if (dom.is_union()) {
      lo = (best > 0 && scan.part_index[best - 1] == scan.part_index[best])
               ? scan.coords[best - 1]
               : scan.coords[best];
      hi = (best + 1 < m && scan.part_index[best + 1] == scan.part_index[best])
               ? scan.coords[best + 1]
               : scan.coords[best];
    } else {
      lo = best == 0 ? scan.coords[0] : scan.coords[best - 1];
      hi = best + 1 == m ? scan.coords[m - 1] : scan.coords[best + 1];
    }

    double chosen = scan.coords[best];
    double chosen_val = best_val;
    if (hi > lo) {
      auto eval = [&](double c) {
        return log_p(dom.is_closed_curve() ? c - std::floor(c) : c);
      };
      const auto [xr, vr] = ternary_max(eval, lo, hi, 1e-12);
      const double xw = dom.is_closed_curve() ? xr - std::floor(xr) : xr;
      if (vr > chosen_val) {
        chosen = xw;
        chosen_val = vr;
      }
    }
    push(chosen);
  }
  return pts;
}

std::vector<double> true_leja_real(const DomainSpec& dom, std::size_t n, std::size_t grid) {
  if (!dom.is_real()) {
    throw std::invalid_argument("real point extraction needs an interval or union domain");
  }
  const std::vector<double> coords = true_leja(dom, n, grid);
  if (dom.is_union()) return coords;
  const auto& iv = std::get<Interval>(dom.shape());
  std::vector<double> out;
  out.reserve(coords.size());
  for (double c : coords) out.push_back(iv.a + iv.length() * c);
  return out;
}

}  // namespace leja
