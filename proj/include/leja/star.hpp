#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leja/domain.hpp"

namespace leja {

/// A strictly increasing row of real points.
struct ArrayRow {
  std::vector<double> points;

  [[nodiscard]] int n() const { return static_cast<int>(points.size()); }
};

/// Sorts the first n entries of seq into a row. Throws std::invalid_argument
/// if the prefix contains duplicates.
[[nodiscard]] ArrayRow sorted_prefix(std::span<const double> seq, int n);

/// Validates (does not sort) an already increasing row.
[[nodiscard]] ArrayRow make_row(std::vector<double> points);

/// Per-midpoint gap diagnostics. j is 1-based: the midpoint between points
/// j and j+1 of the row.
struct StarEntry {
  int j = 0;
  double midpoint = 0.0;
  double s = 0.0;      // half-gap |m - point_j|
  double H = 0.0;      // harmonic mean of distances from m to all n points
  double ratio = 0.0;  // s / H
};

struct StarReport {
  int n = 0;
  std::vector<StarEntry> entries;  // size n - 1
  double max_ratio = 0.0;
  int argmax_j = 0;  // smallest j on ties
};

/// Midpoint metrics for every gap of the row: m_j = (p_j + p_{j+1})/2,
/// s = half-gap width, H = (mean of 1/|m - p_k| over all k)^-1.
[[nodiscard]] StarReport star_metrics(const ArrayRow& row);

/// max_ratio of the sorted first-n prefix at each requested stage.
[[nodiscard]] std::vector<std::pair<int, double>> star_trend(
    std::span<const double> seq, std::span<const int> stages);

/// First `count` entries of the dyadic refinement sequence
/// 0, 1, 1/2, 1/4, 3/4, 1/8, 3/8, 5/8, 7/8, 1/16, ...
[[nodiscard]] std::vector<double> dyadic_sequence(int count);

/// Least-squares slope of ln(value) against ln(n).
[[nodiscard]] double loglog_slope(std::span<const std::pair<int, double>> series);

/// Union of closed subintervals of [0, 1] used to exclude index ranges
/// (x = j/n) from the separation check.
struct ExclusionSet {
  std::vector<Interval> parts;

  [[nodiscard]] bool contains(double x) const;
  [[nodiscard]] double total_length() const;
};

struct SeparationConstants {
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  double B1 = 1.0;
  double B2 = 1.0;
};

struct SeparationViolation {
  int n = 0;
  int j = 0;  // 1-based indices into the row
  int k = 0;
  double distance = 0.0;
  double bound = 0.0;
  bool lower = false;  // true if the lower bound failed
};

struct SeparationFit {
  SeparationConstants constants;
  ExclusionSet excluded;
  int n0 = 1;
  bool feasible = false;
  std::optional<SeparationViolation> first_violation;
};

/// Checks B1*(|j-k|/n)^alpha1 <= |row_j - row_k| <= B2*(|j-k|/n)^alpha2 for
/// every supplied row with n >= n0, every j with j/n outside `excluded`, and
/// every k != j. Comparisons allow 1e-12 relative slack so exact-equality
/// witnesses (equispaced rows with all constants 1) pass in floating point.
/// Throws std::invalid_argument unless 0 < alpha2 <= alpha1 < 1 + alpha2 and
/// B1, B2 > 0. Scan order (rows, then j, then k ascending) fixes which
/// violation is reported first.
[[nodiscard]] SeparationFit separation_check(std::span<const ArrayRow> rows,
                                             SeparationConstants constants,
                                             const ExclusionSet& excluded,
                                             int n0);

/// Heuristic witness fitter: log-log regression of distance against |j-k|/n
/// over the same pair set separation_check scans, with the envelope widened
/// by 2x on both sides. Feasible by construction on the rows it was fitted to.
[[nodiscard]] SeparationConstants fit_separation(std::span<const ArrayRow> rows,
                                                 const ExclusionSet& excluded,
                                                 int n0);

enum class TargetCdf {
  arcsine,
  uniform,
};

/// Kolmogorov-Smirnov distance between the empirical CDF of the row and the
/// target CDF on [support.a, support.b], evaluated exactly at the jump
/// points. Throws std::invalid_argument if a point lies outside the support.
[[nodiscard]] double empirical_cdf_distance(const ArrayRow& row, TargetCdf target,
                                            Interval support);

/// CSV with header `n,j,midpoint,s,H,ratio` and a trailing summary comment.
[[nodiscard]] std::string star_csv(const StarReport& report);

/// JSON object with fields alpha1,alpha2,B1,B2,J,n0,feasible,first_violation.
[[nodiscard]] std::string separation_json(const SeparationFit& fit);

}  // namespace leja
