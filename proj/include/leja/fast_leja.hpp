#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "leja/domain.hpp"
#include "leja/numeric.hpp"

namespace leja {

struct StepResult {
  double coord = 0.0;      ///< internal coordinate of the selected point
  double log_value = 0.0;  ///< ln|p(selected)| with geometric distances
};

/// Greedy node generator state. Points and the interlacing candidate set are
/// kept in an internal coordinate space: the [0, 1] parameter for intervals
/// and curves, the geometric position for interval unions (an arc-length
/// parameter cannot tell apart the two touching part boundaries).
///
/// Each candidate carries a compensated running sum of ln-distances to all
/// selected points, updated with one term per step, so a full pass over the
/// candidate set per step costs O(n) and a complete run O(n^2).
class LejaState {
 public:
  [[nodiscard]] const DomainSpec& domain() const { return dom_; }
  [[nodiscard]] std::size_t size() const { return insertion_.size(); }
  [[nodiscard]] std::span<const double> insertion_order() const { return insertion_; }
  [[nodiscard]] std::span<const double> sorted_points() const { return sorted_; }
  [[nodiscard]] std::span<const double> candidates() const { return cands_; }

  /// ln|p(c)| for every candidate c, geometric distance scale, candidate order.
  [[nodiscard]] std::vector<double> candidate_log_values() const;

  /// Arc-length / affine parameter in [0, 1] for an internal coordinate.
  [[nodiscard]] double parameter_of(double coord) const;
  /// Geometric position for an internal coordinate.
  [[nodiscard]] std::complex<double> point_of(double coord) const;

  [[nodiscard]] std::vector<double> insertion_parameters() const;
  [[nodiscard]] std::vector<std::complex<double>> insertion_points() const;

  /// Selects the candidate maximizing ln|p|, breaking near-ties (within
  /// 1e-12) toward the smaller coordinate; moves it to the point set and
  /// replaces it with the midpoints of the two adjacent gaps.
  StepResult step();

  /// Throws std::logic_error when a structural invariant is broken: unsorted
  /// or duplicate points, candidate counts off, or a gap whose candidate
  /// count is not exactly one.
  void validate() const;

 private:
  friend LejaState init_state(const DomainSpec& dom, double s1);

  explicit LejaState(DomainSpec dom) : dom_(std::move(dom)) {}

  [[nodiscard]] double score_term(double cand, std::complex<double> cand_geom,
                                  double point, std::complex<double> point_geom) const;
  [[nodiscard]] CompensatedSum fresh_score(double cand, std::complex<double> cand_geom) const;
  [[nodiscard]] double to_geometric_log(const CompensatedSum& score) const;
  void add_point(double coord);
  void insert_candidate(double coord);
  void validate_open_arc() const;
  void validate_union() const;
  void validate_closed() const;

  DomainSpec dom_;
  std::vector<double> insertion_;
  std::vector<double> sorted_;
  std::vector<double> cands_;
  std::vector<CompensatedSum> scores_;
  // geometric caches, used for curve domains only
  std::vector<std::complex<double>> insertion_geom_;
  std::vector<std::complex<double>> cand_geom_;
};

/// Initial configuration: interval and open-arc domains start with both
/// endpoints as points and the single candidate s1; closed curves start with
/// the point t = 0 and the candidate s1; unions start with every part
/// endpoint and one candidate per part midpoint (s1 is ignored there).
/// Throws std::invalid_argument unless s1 lies in (0, 1).
[[nodiscard]] LejaState init_state(const DomainSpec& dom, double s1 = 0.5);

/// Runs the generator until n points have been selected.
[[nodiscard]] LejaState generate(const DomainSpec& dom, std::size_t n, double s1 = 0.5);

/// Geometric positions (real domains only) of generate(dom, n, s1).
[[nodiscard]] std::vector<double> generate_real(const DomainSpec& dom, std::size_t n,
                                                double s1 = 0.5);

/// Sum of ln|map_param(x) - map_param(t_j)|; -inf exactly when x coincides
/// with some t_j.
[[nodiscard]] double log_abs_poly(std::span<const double> params, const DomainSpec& dom,
                                  double x);

/// Continuum greedy reference: each point maximizes |p| over a dense scan
/// grid (grid >= 10 n required), refined by ternary search to 1e-12. Returns
/// internal coordinates; starts from coordinate 0.
[[nodiscard]] std::vector<double> true_leja(const DomainSpec& dom, std::size_t n,
                                            std::size_t grid);

/// Geometric positions (real domains only) of true_leja.
[[nodiscard]] std::vector<double> true_leja_real(const DomainSpec& dom, std::size_t n,
                                                 std::size_t grid);

}  // namespace leja
