#include "leja/interp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "leja/csv.hpp"
#include "leja/fast_leja.hpp"
#include "leja/numeric.hpp"
#include "leja/optimize.hpp"

namespace leja {

namespace {

const std::map<std::string, RealFn>& registry() {
  static const std::map<std::string, RealFn> fns = {
      {"exp", [](double x) { return std::exp(x); }},
      {"runge25", [](double x) { return 1.0 / (1.0 + 25.0 * (x - 0.5) * (x - 0.5)); }},
      {"pole2", [](double x) { return 1.0 / (x + 2.0); }},
      {"abs-half", [](double x) { return std::abs(x - 0.5); }},
      {"cube", [](double x) { return x * x * x; }},
  };
  return fns;
}

}  // namespace

const RealFn* find_function(const std::string& id) {
  const auto it = registry().find(id);
  return it == registry().end() ? nullptr : &it->second;
}

std::vector<std::string> function_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

namespace {

std::vector<double> barycentric_weights(std::span<const double> nodes) {
  const size_t n = nodes.size();
  std::vector<double> log_w(n, 0.0);
  std::vector<int> sign(n, 1);
  for (size_t j = 0; j < n; ++j) {
    CompensatedSum mag;
    int greater = 0;
    for (size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      const double d = nodes[j] - nodes[k];
      if (d == 0.0) throw std::invalid_argument("duplicate interpolation nodes");
      if (d < 0.0) ++greater;
      mag.add(std::log(std::abs(d)));
    }
    log_w[j] = -mag.value();
    sign[j] = greater % 2 == 0 ? 1 : -1;
  }
  const double top = *std::max_element(log_w.begin(), log_w.end());
  std::vector<double> w(n);
  for (size_t j = 0; j < n; ++j) w[j] = sign[j] * std::exp(log_w[j] - top);
  return w;
}

}  // namespace

Interpolant build_interpolant(std::span<const double> nodes, const std::string& fn_id) {
  const RealFn* fn = find_function(fn_id);
  if (fn == nullptr) throw std::invalid_argument("unknown function id: " + fn_id);
  Interpolant ip;
  ip.nodes.assign(nodes.begin(), nodes.end());
  ip.weights = barycentric_weights(nodes);
  ip.values.reserve(nodes.size());
  for (double x : nodes) ip.values.push_back((*fn)(x));
  ip.fn_id = fn_id;
  return ip;
}

Interpolant build_interpolant(std::span<const double> nodes,
                              std::span<const double> values) {
  if (nodes.size() != values.size()) {
    throw std::invalid_argument("node and value counts differ");
  }
  Interpolant ip;
  ip.nodes.assign(nodes.begin(), nodes.end());
  ip.weights = barycentric_weights(nodes);
  ip.values.assign(values.begin(), values.end());
  return ip;
}

double eval_interpolant(const Interpolant& ip, double x) {
  for (size_t j = 0; j < ip.nodes.size(); ++j) {
    if (x == ip.nodes[j]) return ip.values[j];
  }
  double num = 0.0, den = 0.0;
  for (size_t j = 0; j < ip.nodes.size(); ++j) {
    const double c = ip.weights[j] / (x - ip.nodes[j]);
    num += c * ip.values[j];
    den += c;
  }
  return num / den;
}

namespace {

/// Lebesgue function via the weight form; exactly 1 on a node hit.
double lebesgue_function(std::span<const double> nodes, std::span<const double> weights,
                         double x) {
  double abs_sum = 0.0, den = 0.0;
  for (size_t j = 0; j < nodes.size(); ++j) {
    const double d = x - nodes[j];
    if (d == 0.0) return 1.0;
    const double c = weights[j] / d;
    abs_sum += std::abs(c);
    den += c;
  }
  return abs_sum / std::abs(den);
}

std::vector<Interval> real_parts(const DomainSpec& dom) {
  if (dom.is_interval()) return {std::get<Interval>(dom.shape())};
  if (dom.is_union()) return std::get<IntervalUnion>(dom.shape()).parts;
  throw std::invalid_argument("operation requires a real domain");
}

/// Chebyshev-distributed grid including both part endpoints.
std::vector<double> cheb_grid(Interval part, int count) {
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    const double c = std::cos(std::numbers::pi * i / (count - 1));
    xs[i] = part.a + part.length() * 0.5 * (1.0 - c);
  }
  xs.front() = part.a;
  xs.back() = part.b;
  return xs;
}

}  // namespace

LebesgueReport lebesgue_constant(std::span<const double> nodes, const DomainSpec& dom,
                                 int grid_multiplier) {
  if (grid_multiplier < 10) {
    throw std::invalid_argument("lebesgue_constant: grid_multiplier must be >= 10");
  }
  if (nodes.empty()) throw std::invalid_argument("lebesgue_constant: no nodes");
  const std::vector<double> weights = barycentric_weights(nodes);
  const int n = static_cast<int>(nodes.size());
  const std::vector<Interval> parts = real_parts(dom);

  const int per_part = std::max(4, grid_multiplier * n * n);
  double best_v = 0.0;
  double best_x = parts.front().a;
  double cell_lo = parts.front().a, cell_hi = parts.front().b;
  int total_grid = 0;
  for (const Interval& part : parts) {
    const std::vector<double> xs = cheb_grid(part, per_part);
    total_grid += per_part;
    for (int i = 0; i < per_part; ++i) {
      const double v = lebesgue_function(nodes, weights, xs[i]);
      if (v > best_v) {
        best_v = v;
        best_x = xs[i];
        cell_lo = xs[std::max(0, i - 1)];
        cell_hi = xs[std::min(per_part - 1, i + 1)];
      }
    }
  }

  const double tol = 1e-10 * (cell_hi - cell_lo > 0.0 ? cell_hi - cell_lo : 1.0);
  if (cell_hi - cell_lo > tol) {
    const auto [x, v] = golden_section_max(
        [&](double t) { return lebesgue_function(nodes, weights, t); }, cell_lo,
        cell_hi, tol);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }
  return LebesgueReport{n, std::max(best_v, 1.0), best_x, total_grid};
}

const char* node_source_name(NodeSource source) {
  switch (source) {
    case NodeSource::fast_leja: return "fast-leja";
    case NodeSource::true_leja: return "true-leja";
    case NodeSource::chebyshev: return "chebyshev";
    case NodeSource::equispaced: return "equispaced";
  }
  return "?";
}

bool parse_node_source(std::string_view text, NodeSource& out) {
  if (text == "fast-leja") out = NodeSource::fast_leja;
  else if (text == "true-leja") out = NodeSource::true_leja;
  else if (text == "chebyshev") out = NodeSource::chebyshev;
  else if (text == "equispaced") out = NodeSource::equispaced;
  else return false;
  return true;
}

std::vector<double> make_nodes(NodeSource source, const DomainSpec& dom, int n) {
  if (n < 1) throw std::invalid_argument("make_nodes: n must be >= 1");
  if (!dom.is_real()) throw std::invalid_argument("make_nodes: real domains only");
  switch (source) {
    case NodeSource::fast_leja:
      return generate_real(dom, static_cast<size_t>(n), 0.5);
    case NodeSource::true_leja:
      return true_leja_real(dom, static_cast<size_t>(n),
                            std::max<size_t>(2048, 16 * static_cast<size_t>(n)));
    case NodeSource::chebyshev:
    case NodeSource::equispaced: {
      if (!dom.is_interval()) {
        throw std::invalid_argument("chebyshev/equispaced nodes need a single interval");
      }
      const Interval iv = std::get<Interval>(dom.shape());
      std::vector<double> nodes(n);
      if (n == 1) {
        nodes[0] = iv.a + 0.5 * iv.length();
      } else if (source == NodeSource::chebyshev) {
        nodes = cheb_grid(iv, n);
      } else {
        for (int j = 0; j < n; ++j) {
          nodes[j] = iv.a + iv.length() * j / (n - 1);
        }
        nodes.back() = iv.b;
      }
      return nodes;
    }
  }
  throw std::invalid_argument("make_nodes: unknown source");
}

std::vector<std::pair<int, double>> error_study(const std::string& fn_id,
                                                NodeSource source,
                                                std::span<const int> stages,
                                                const DomainSpec& dom) {
  const RealFn* fn = find_function(fn_id);
  if (fn == nullptr) throw std::invalid_argument("unknown function id: " + fn_id);
  const std::vector<Interval> parts = real_parts(dom);

  std::vector<std::pair<int, double>> out;
  out.reserve(stages.size());
  int prev = 0;
  for (int n : stages) {
    if (n <= prev) throw std::invalid_argument("error_study: stages not increasing");
    prev = n;
    const std::vector<double> nodes = make_nodes(source, dom, n);
    const Interpolant ip = build_interpolant(nodes, fn_id);
    double err = 0.0;
    const int probe = std::max(4, 10 * n * n);
    for (const Interval& part : parts) {
      for (double x : cheb_grid(part, probe)) {
        err = std::max(err, std::abs((*fn)(x)-eval_interpolant(ip, x)));
      }
    }
    out.emplace_back(n, err);
  }
  return out;
}

std::string error_study_csv(std::span<const std::pair<int, double>> rows) {
  std::ostringstream out;
  out << "n,sup_error\n";
  for (const auto& [n, err] : rows) {
    out << n << ',' << format_double(err) << '\n';
  }
  return out.str();
}

std::string lebesgue_csv(std::span<const LebesgueReport> rows) {
  std::ostringstream out;
  out << "n,lambda,lambda_nth_root,argmax_x\n";
  for (const LebesgueReport& r : rows) {
    out << r.n << ',' << format_double(r.lambda) << ','
        << format_double(std::pow(r.lambda, 1.0 / r.n)) << ','
        << format_double(r.argmax_x) << '\n';
  }
  return out.str();
}

}  // namespace leja
