#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leja/domain.hpp"

namespace leja {

struct SupResult {
  double argmax = 0.0;
  double log_value = 0.0;  // ln of the max of the product of distances
};

/// Maximizes sum of ln|x - z_j| over [iv.a, iv.b]. Samples a Chebyshev grid
/// of max(64, 8 * #zeros) points, golden-section refines every local maximum
/// to bracket width tol, and snaps to an interval endpoint when it is at
/// least as good. Near-ties (within 1e-9 in log value) resolve to the
/// smallest argmax.
[[nodiscard]] SupResult supnorm(std::span<const double> zeros, Interval iv,
                                double tol);

/// Zero configuration epsilon, zetas < -epsilon < epsilon < etas used by the
/// sup-norm bound checks. The full polynomial is
/// p(z) = (z^2 - eps^2) * prod(z - zeta_j) * prod(z - eta_j).
struct BoundConfig {
  double epsilon = 0.0;
  std::vector<double> zetas;  // strictly increasing, all < -epsilon
  std::vector<double> etas;   // strictly increasing, all > epsilon

  /// Throws std::invalid_argument on any ordering violation or empty side.
  void validate() const;
};

struct BoundCheck {
  BoundConfig config;
  double m = 0.0;  // argmax of |p| on [-epsilon, epsilon]
  bool lemma2_ok = false;
  bool prop3_ok = false;
  double prop3_margin = 0.0;  // log-space rhs - lhs
};

/// Locates m and verifies the applicable side of the two-part gap bound:
/// for m > 0,  |q2(m)| < exp(eps * sum 1/eta) * |q2(0)|  and
///             |p1(m)| < eps * |p1'(eps)| = eps * 2 eps * prod(eps + |zeta|);
/// for m < 0 the mirrored pair. |m| <= 1e-10 passes vacuously (the bound
/// excludes an interior max at the origin). Also fills the prop3 fields.
[[nodiscard]] BoundCheck check_lemma2(const BoundConfig& config);

/// Verifies ||p|| / |p(0)| <= 2 * exp(eps * (sum 1/|zeta| + sum 1/eta)) on
/// [-eps, eps], all in log space. Also fills the lemma2 flag.
[[nodiscard]] BoundCheck check_prop3(const BoundConfig& config);

/// Both checks on one configuration (shared sup-norm work).
[[nodiscard]] BoundCheck check_bounds(const BoundConfig& config);

/// Seeded random configuration: epsilon in [0.01, 0.3], 1..8 zetas in
/// [-3, -eps-0.05], 1..8 etas in [eps+0.05, 3]. Identical seeds give
/// identical configurations on every platform.
[[nodiscard]] BoundConfig random_config(std::uint64_t seed);

/// check_bounds over trial seeds base_seed + 0 .. base_seed + trials - 1,
/// parallelized up to the LEJA_THREADS budget; results are in trial order
/// regardless of thread count.
[[nodiscard]] std::vector<BoundCheck> run_trials(int trials,
                                                 std::uint64_t base_seed);

/// CSV with header `trial,epsilon,n1,n2,m,lemma2_ok,prop3_ok,prop3_log_margin`.
[[nodiscard]] std::string trials_csv(std::span<const BoundCheck> checks);

}  // namespace leja
