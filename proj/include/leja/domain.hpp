#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace leja {

/// Closed real interval [a, b] with a < b.
struct Interval {
  double a = 0.0;
  double b = 1.0;

  [[nodiscard]] double length() const { return b - a; }
};

/// Finite union of pairwise disjoint closed intervals, sorted by left endpoint.
struct IntervalUnion {
  std::vector<Interval> parts;

  [[nodiscard]] double total_length() const;
};

/// Registered parametric curve z(t), t in [0, 1]. Closed curves identify t = 0
/// and t = 1.
struct ParamCurve {
  std::string id;
  bool closed = false;
};

struct CurveDef {
  bool closed = false;
  std::function<std::complex<double>(double)> eval;
};

/// Adds a curve to the registry. Returns false if the id is already taken.
/// "semicircle", "circle" and "segment" are built in.
bool register_curve(const std::string& id, CurveDef def);

/// Looks up a registered curve; nullptr if unknown.
[[nodiscard]] const CurveDef* find_curve(const std::string& id);

enum class ParseErrorKind {
  malformed,
  reversed_endpoints,
  overlapping_parts,
  unknown_curve,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

/// A point-set domain: one interval, a disjoint union of intervals, or a
/// registered parametric curve. Construction validates the shape invariants.
class DomainSpec {
 public:
  explicit DomainSpec(Interval iv);
  explicit DomainSpec(IntervalUnion u);
  explicit DomainSpec(ParamCurve c);

  [[nodiscard]] const std::variant<Interval, IntervalUnion, ParamCurve>& shape() const {
    return shape_;
  }

  [[nodiscard]] bool is_interval() const {
    return std::holds_alternative<Interval>(shape_);
  }
  [[nodiscard]] bool is_union() const {
    return std::holds_alternative<IntervalUnion>(shape_);
  }
  [[nodiscard]] bool is_curve() const {
    return std::holds_alternative<ParamCurve>(shape_);
  }
  /// True for interval and union domains (points live on the real line).
  [[nodiscard]] bool is_real() const { return !is_curve(); }
  [[nodiscard]] bool is_closed_curve() const;

  /// Maps a parameter t in [0, 1] to a point of the domain. Intervals map
  /// affinely. Unions concatenate parts proportionally to arc length; a t
  /// that falls on a cumulative-length boundary resolves to the earlier
  /// part's right endpoint. Closed curves wrap t = 1 to t = 0 so the two ends
  /// map to the same point exactly.
  [[nodiscard]] std::complex<double> map_param(double t) const;

  /// Grammar used by parse_domain: "a,b", "a,b;c,d;...", or "curve:<id>".
  [[nodiscard]] std::string to_string() const;

 private:
  std::variant<Interval, IntervalUnion, ParamCurve> shape_;
};

/// Parses the domain grammar. Throws ParseError with a distinct kind for
/// malformed text, reversed endpoints, overlapping or unsorted parts, and
/// unknown curve ids.
[[nodiscard]] DomainSpec parse_domain(std::string_view text);

}  // namespace leja
