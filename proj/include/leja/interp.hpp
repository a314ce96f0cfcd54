#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leja/domain.hpp"

namespace leja {

using RealFn = std::function<double(double)>;

/// Built-in sample functions: exp, runge25 (1/(1+25(x-1/2)^2)), pole2
/// (1/(x+2)), abs-half (|x-1/2|), cube (x^3). Returns nullptr for unknown
/// ids.
[[nodiscard]] const RealFn* find_function(const std::string& id);
[[nodiscard]] std::vector<std::string> function_ids();

/// Barycentric form of the interpolating polynomial through (nodes, values).
/// Weights 1 / prod_{k != j} (nodes_j - nodes_k) are computed in
/// log-magnitude plus sign and rescaled so the largest magnitude is exactly
/// 1; the barycentric ratio is invariant under that common factor.
struct Interpolant {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> values;
  std::string fn_id;  // empty when built from raw values
};

/// Samples a registered function at the nodes. Throws std::invalid_argument
/// on duplicate nodes or an unknown fn_id.
[[nodiscard]] Interpolant build_interpolant(std::span<const double> nodes,
                                            const std::string& fn_id);
[[nodiscard]] Interpolant build_interpolant(std::span<const double> nodes,
                                            std::span<const double> values);

/// Second-form barycentric evaluation; a bitwise node hit returns the stored
/// value unchanged.
[[nodiscard]] double eval_interpolant(const Interpolant& ip, double x);

struct LebesgueReport {
  int n = 0;
  double lambda = 1.0;
  double argmax_x = 0.0;
  int grid_size = 0;
};

/// Maximum of the Lebesgue function sum_j |l_j(x)| over the domain: sampled
/// on a Chebyshev-distributed grid of grid_multiplier * n^2 points per
/// interval part (smallest x wins exact ties), then golden-section refined
/// inside the best bracketing cell. Requires grid_multiplier >= 10 and a
/// real domain.
[[nodiscard]] LebesgueReport lebesgue_constant(std::span<const double> nodes,
                                               const DomainSpec& dom,
                                               int grid_multiplier);

enum class NodeSource {
  fast_leja,
  true_leja,
  chebyshev,
  equispaced,
};

[[nodiscard]] const char* node_source_name(NodeSource source);
/// Accepts the CLI spellings fast-leja, true-leja, chebyshev, equispaced.
[[nodiscard]] bool parse_node_source(std::string_view text, NodeSource& out);

/// n nodes of the requested family on a real domain. chebyshev/equispaced
/// are defined on single intervals only.
[[nodiscard]] std::vector<double> make_nodes(NodeSource source, const DomainSpec& dom,
                                             int n);

/// Sup-error of interpolating fn_id at each stage, estimated on a
/// 10 n^2-point Chebyshev-distributed probe grid per interval part.
[[nodiscard]] std::vector<std::pair<int, double>> error_study(
    const std::string& fn_id, NodeSource source, std::span<const int> stages,
    const DomainSpec& dom);

/// CSV with header `n,sup_error`.
[[nodiscard]] std::string error_study_csv(
    std::span<const std::pair<int, double>> rows);

/// CSV with header `n,lambda,lambda_nth_root,argmax_x`.
[[nodiscard]] std::string lebesgue_csv(std::span<const LebesgueReport> rows);

}  // namespace leja
