#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "leja/domain.hpp"

namespace leja {

/// Sum of ln|p_j - p_k| over all pairs j < k (the log of the absolute
/// Vandermonde determinant); -inf on a repeated point.
[[nodiscard]] double log_vdm(std::span<const double> points);
[[nodiscard]] double log_vdm(std::span<const std::complex<double>> points);

/// exp(2 * log_vdm / (n (n + 1))) for the n given points; tends to the
/// transfinite diameter of the set the points fill out.
[[nodiscard]] double dn_root(std::span<const double> points);
[[nodiscard]] double dn_root(std::span<const std::complex<double>> points);

/// n-th root of the minimal monic sup-norm on an interval,
/// (2 ((b - a) / 4)^n)^(1/n); the limit in n is the transfinite diameter
/// (b - a) / 4.
[[nodiscard]] double cheb_constant(Interval iv, int n);

/// Growth quantities for one prefix of the sequence. n is the prefix length;
/// the row describes the step that brought the count to n: the product
/// polynomial over the first n - 1 points, evaluated at point n.
struct GrowthRow {
  int n = 0;
  double log_vdm = 0.0;     // ln|VDM| of the first n points
  double dn_root = 0.0;     // exp(2 log_vdm / (n (n + 1)))
  double step_log = 0.0;    // ln of the distance product picked up by point n
  double sup_log = 0.0;     // ln sup-norm of the same product over the domain
  double tau_ratio = 0.0;   // exp(step_log - sup_log), in (0, 1]
  double pseudo_growth = 0.0;          // (sup_log - step_log) / (n - 1)
  double telescope_residual = 0.0;     // |ln L_n - ln L_{n-1} - step_log|
};

struct GrowthOptions {
  /// Gaps whose midpoint value is within this log window of the best
  /// midpoint get golden-section refinement during sup-norm estimation.
  double refine_window = 4.0;
  /// At least this many best gaps are refined regardless of the window.
  int refine_top = 4;
  /// Prefixes shorter than this use the dense sup-norm scan instead of the
  /// incremental gap-midpoint estimate.
  int full_scan_below = 129;
};

struct GrowthSeries {
  std::vector<GrowthRow> rows;
  /// Largest telescoping residual over every prefix up to the last stage,
  /// not only the reported ones.
  double max_telescope_residual = 0.0;
  int argmax_residual_n = 0;
};

/// Rows at each requested stage for the given insertion-order points.
/// Prefix sums (log_vdm, step_log, residual) accumulate over every prefix in
/// compensated arithmetic; sup_log / tau_ratio are evaluated at the
/// requested stages only, and only for real domains (NaN on curves).
/// Stages must be strictly increasing, each in [2, points.size()].
[[nodiscard]] GrowthSeries growth_report(std::span<const std::complex<double>> points,
                                         const DomainSpec& dom,
                                         std::span<const int> stages,
                                         const GrowthOptions& opts = {});

/// CSV with header `n,log_vdm,dn_root,step_ratio,tau_ratio,pseudo_growth`.
/// The step_ratio column carries step_log: the raw ratio underflows a double
/// past n of about 40, so it is reported on the log scale like log_vdm.
[[nodiscard]] std::string growth_csv(const GrowthSeries& series);

/// Fixed recipe behind the 13-point ratio plot: the degree-13 node product
/// sampled at 2001 equispaced points of [0, 1], plus twice its value at each
/// of the 12 candidate midpoints.
struct Fig3Data {
  std::vector<double> xs;         // 2001 graph abscissae
  std::vector<double> p13;        // node-product values at xs
  std::vector<double> midpoints;  // 12 candidate midpoints, ascending
  std::vector<double> twice_p13;  // 2 * product value at each midpoint
};

[[nodiscard]] Fig3Data fig3_data();

/// CSV with header `x,p13`.
[[nodiscard]] std::string fig3_graph_csv(const Fig3Data& data);
/// CSV with header `midpoint,2p13`.
[[nodiscard]] std::string fig3_circles_csv(const Fig3Data& data);

}  // namespace leja
