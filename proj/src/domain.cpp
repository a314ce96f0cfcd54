#include "leja/domain.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "leja/csv.hpp"

namespace leja {

namespace {

std::map<std::string, CurveDef>& registry() {
  static std::map<std::string, CurveDef> curves = [] {
    std::map<std::string, CurveDef> m;
    m["semicircle"] = {false, [](double t) {
                         return std::complex<double>(std::cos(std::numbers::pi * t),
                                                     std::sin(std::numbers::pi * t));
                       }};
    m["circle"] = {true, [](double t) {
                     const double u = t - std::floor(t);
                     return std::complex<double>(std::cos(2.0 * std::numbers::pi * u),
                                                 std::sin(2.0 * std::numbers::pi * u));
                   }};
    m["segment"] = {false, [](double t) {
                      return std::complex<double>(-1.0 + 2.0 * t, 0.0);
                    }};
    return m;
  }();
  return curves;
}

std::mutex registry_mutex;

void check_param(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("parameter must lie in [0, 1]");
  }
}

}  // namespace

double IntervalUnion::total_length() const {
  double len = 0.0;
  for (const auto& p : parts) len += p.length();
  return len;
}

bool register_curve(const std::string& id, CurveDef def) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  return registry().emplace(id, std::move(def)).second;
}

const CurveDef* find_curve(const std::string& id) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto it = registry().find(id);
  return it == registry().end() ? nullptr : &it->second;
}

DomainSpec::DomainSpec(Interval iv) : shape_(iv) {
  if (!(iv.a < iv.b)) {
    throw ParseError(ParseErrorKind::reversed_endpoints,
                     "interval endpoints must satisfy a < b");
  }
}

DomainSpec::DomainSpec(IntervalUnion u) : shape_(std::move(u)) {
  const auto& parts = std::get<IntervalUnion>(shape_).parts;
  if (parts.empty()) {
    throw ParseError(ParseErrorKind::malformed, "interval union needs at least one part");
  }
  for (const auto& p : parts) {
    if (!(p.a < p.b)) {
      throw ParseError(ParseErrorKind::reversed_endpoints,
                       "interval endpoints must satisfy a < b");
    }
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!(parts[i - 1].b < parts[i].a)) {
      throw ParseError(ParseErrorKind::overlapping_parts,
                       "union parts must be sorted and pairwise disjoint");
    }
  }
}

DomainSpec::DomainSpec(ParamCurve c) : shape_(std::move(c)) {
  auto& pc = std::get<ParamCurve>(shape_);
  const CurveDef* def = find_curve(pc.id);
  if (def == nullptr) {
    throw ParseError(ParseErrorKind::unknown_curve, "unknown curve id: " + pc.id);
  }
  pc.closed = def->closed;
}

bool DomainSpec::is_closed_curve() const {
  const auto* c = std::get_if<ParamCurve>(&shape_);
  return c != nullptr && c->closed;
}

std::complex<double> DomainSpec::map_param(double t) const {
  if (const auto* iv = std::get_if<Interval>(&shape_)) {
    check_param(t);
    return {iv->a + (iv->b - iv->a) * t, 0.0};
  }
  if (const auto* u = std::get_if<IntervalUnion>(&shape_)) {
    check_param(t);
    const double total = u->total_length();
    double acc = 0.0;
    for (const auto& p : u->parts) {
      const double hi = (acc + p.length()) / total;
      if (t <= hi) {
        const double lo = acc / total;
        const double frac = (t - lo) / (hi - lo);
        return {p.a + p.length() * frac, 0.0};
      }
      acc += p.length();
    }
    return {u->parts.back().b, 0.0};
  }
  const auto& c = std::get<ParamCurve>(shape_);
  if (!c.closed) check_param(t);
  return find_curve(c.id)->eval(t);
}

std::string DomainSpec::to_string() const {
  if (const auto* iv = std::get_if<Interval>(&shape_)) {
    return format_double(iv->a) + "," + format_double(iv->b);
  }
  if (const auto* u = std::get_if<IntervalUnion>(&shape_)) {
    std::string out;
    for (std::size_t i = 0; i < u->parts.size(); ++i) {
      if (i > 0) out += ';';
      out += format_double(u->parts[i].a) + "," + format_double(u->parts[i].b);
    }
    return out;
  }
  return "curve:" + std::get<ParamCurve>(shape_).id;
}

namespace {

double parse_real(std::string_view text) {
  std::string s(text);
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || static_cast<std::size_t>(end - begin) != s.size() || !std::isfinite(v)) {
    throw ParseError(ParseErrorKind::malformed, "not a finite real: '" + s + "'");
  }
  return v;
}

Interval parse_pair(std::string_view part) {
  const auto comma = part.find(',');
  if (comma == std::string_view::npos || part.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError(ParseErrorKind::malformed,
                     "expected 'a,b' in domain part: '" + std::string(part) + "'");
  }
  const double a = parse_real(part.substr(0, comma));
  const double b = parse_real(part.substr(comma + 1));
  if (!(a < b)) {
    throw ParseError(ParseErrorKind::reversed_endpoints,
                     "interval endpoints must satisfy a < b");
  }
  return {a, b};
}

}  // namespace

DomainSpec parse_domain(std::string_view text) {
  if (text.empty()) {
    throw ParseError(ParseErrorKind::malformed, "empty domain");
  }
  if (text.starts_with("curve:")) {
    return DomainSpec(ParamCurve{std::string(text.substr(6)), false});
  }
  std::vector<Interval> parts;
  std::string_view rest = text;
  while (true) {
    const auto semi = rest.find(';');
    parts.push_back(parse_pair(rest.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  if (parts.size() == 1) {
    return DomainSpec(parts.front());
  }
  return DomainSpec(IntervalUnion{std::move(parts)});
}

}  // namespace leja
