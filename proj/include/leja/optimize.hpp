#pragma once

#include <cmath>
#include <utility>

namespace leja {

/// Golden-section maximization of f on [lo, hi], run until the bracket width
/// drops below tol. Assumes f is unimodal on the bracket. Returns (argmax,
/// max value).
template <class F>
[[nodiscard]] std::pair<double, double> golden_section_max(F&& f, double lo, double hi,
                                                           double tol) {
  constexpr double inv_phi = 0.6180339887498948482;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

/// Ternary-search maximization of f on [lo, hi] to bracket width tol.
template <class F>
[[nodiscard]] std::pair<double, double> ternary_max(F&& f, double lo, double hi, double tol) {
  double a = lo, b = hi;
  while (b - a > tol) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    if (f(m1) < f(m2)) {
      a = m1;
    } else {
      b = m2;
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

}  // namespace leja
