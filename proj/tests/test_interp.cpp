#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "leja/fast_leja.hpp"
#include "leja/interp.hpp"

using namespace leja;

namespace {

// direct Lagrange basis polynomial, product-quotient form
double lagrange_basis(std::span<const double> nodes, std::size_t j, double x) {
  double p = 1.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k != j) p *= (x - nodes[k]) / (nodes[j] - nodes[k]);
  }
  return p;
}

}  // namespace

TEST_CASE("the function registry knows the built-in ids") {
  CHECK(find_function("exp") != nullptr);
  CHECK(find_function("runge25") != nullptr);
  CHECK(find_function("pole2") != nullptr);
  CHECK(find_function("abs-half") != nullptr);
  CHECK(find_function("cube") != nullptr);
  CHECK(find_function("nope") == nullptr);
  CHECK(function_ids().size() == 5);
  CHECK((*find_function("pole2"))(0.0) == 0.5);
  CHECK((*find_function("cube"))(2.0) == 8.0);
  CHECK((*find_function("abs-half"))(0.25) == 0.25);
}

TEST_CASE("barycentric weights are normalized to unit peak magnitude") {
  const Interpolant two = build_interpolant(std::vector<double>{0.0, 1.0}, "exp");
  CHECK(two.weights == std::vector<double>{-1.0, 1.0});

  const Interpolant three = build_interpolant(std::vector<double>{0.0, 0.5, 1.0}, "exp");
  REQUIRE(three.weights.size() == 3);
  CHECK(three.weights[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(three.weights[1] == -1.0);
  CHECK(three.weights[2] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(three.fn_id == "exp");
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS((void)build_interpolant(std::vector<double>{0.0, 0.0, 1.0}, "exp"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)build_interpolant(std::vector<double>{0.0, 1.0}, "nope"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)build_interpolant(std::vector<double>{0.0, 1.0},
                                          std::vector<double>{1.0}),
                  std::invalid_argument);
}

TEST_CASE("a node hit returns the stored value unchanged") {
  const Interpolant ip = build_interpolant(std::vector<double>{0.0, 0.25, 1.0},
                                           std::vector<double>{5.0, -3.0, 7.0});
  CHECK(eval_interpolant(ip, 0.25) == -3.0);
  CHECK(eval_interpolant(ip, 0.0) == 5.0);
  CHECK(eval_interpolant(ip, 1.0) == 7.0);
  CHECK(ip.fn_id.empty());
}

TEST_CASE("two-point interpolation of exp is the secant value") {
  const Interpolant ip = build_interpolant(std::vector<double>{0.0, 1.0}, "exp");
  CHECK(eval_interpolant(ip, 0.5) ==
        doctest::Approx(0.5 * (1.0 + std::exp(1.0))).epsilon(1e-14));
}

TEST_CASE("quadratic data is reproduced exactly between the nodes") {
  const Interpolant ip = build_interpolant(std::vector<double>{0.0, 0.5, 1.0},
                                           std::vector<double>{0.0, 0.25, 1.0});
  CHECK(eval_interpolant(ip, 0.25) == doctest::Approx(0.0625).epsilon(1e-14));
  CHECK(eval_interpolant(ip, 0.9) == doctest::Approx(0.81).epsilon(1e-14));
}

TEST_CASE("single-node interpolants are constant") {
  const Interpolant ip = build_interpolant(std::vector<double>{0.3}, "exp");
  CHECK(ip.weights == std::vector<double>{1.0});
  CHECK(eval_interpolant(ip, 0.3) == std::exp(0.3));
  CHECK(eval_interpolant(ip, 0.9) == doctest::Approx(std::exp(0.3)).epsilon(1e-14));
}

TEST_CASE("unit-vector data reproduces the Lagrange basis") {
  const auto nodes = generate_real(parse_domain("0,1"), 8, 0.5);
  for (std::size_t j : {0u, 3u, 7u}) {
    std::vector<double> unit(nodes.size(), 0.0);
    unit[j] = 1.0;
    const Interpolant ip = build_interpolant(nodes, unit);
    for (int i = 0; i <= 50; ++i) {
      const double x = 0.013 + i * 0.019;
      if (x > 1.0) break;
      CHECK(eval_interpolant(ip, x) ==
            doctest::Approx(lagrange_basis(nodes, j, x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("polynomials below the node count are reproduced") {
  const auto nodes = generate_real(parse_domain("0,1"), 12, 0.5);
  for (int k : {0, 1, 4, 7, 11}) {
    CAPTURE(k);
    std::vector<double> values;
    for (double a : nodes) values.push_back(std::pow(a, k));
    const Interpolant ip = build_interpolant(nodes, values);
    for (int i = 1; i < 40; ++i) {
      const double x = i / 40.0;
      CHECK(eval_interpolant(ip, x) == doctest::Approx(std::pow(x, k)).epsilon(1e-11));
    }
  }
}

TEST_CASE("weights are invariant under affine node maps") {
  const auto base = generate_real(parse_domain("0,1"), 10, 0.5);
  std::vector<double> mapped;
  for (double x : base) mapped.push_back(2.0 * x + 5.0);
  const Interpolant a = build_interpolant(base, std::vector<double>(10, 1.0));
  const Interpolant b = build_interpolant(mapped, std::vector<double>(10, 1.0));
  for (std::size_t j = 0; j < 10; ++j) {
    CHECK(a.weights[j] == doctest::Approx(b.weights[j]).epsilon(1e-13));
  }
}

TEST_CASE("three equispaced nodes have Lebesgue constant 5/4") {
  const std::vector<double> nodes{0.0, 0.5, 1.0};
  const LebesgueReport rep = lebesgue_constant(nodes, parse_domain("0,1"), 10);
  CHECK(rep.n == 3);
  CHECK(rep.lambda == doctest::Approx(1.25).epsilon(1e-9));
  CHECK(rep.argmax_x == doctest::Approx(0.25).epsilon(1e-5));
  CHECK(rep.grid_size >= 90);
}

TEST_CASE("two nodes interpolate linearly with constant one") {
  const LebesgueReport rep =
      lebesgue_constant(std::vector<double>{0.0, 1.0}, parse_domain("0,1"), 10);
  CHECK(rep.lambda == 1.0);
}

TEST_CASE("the Lebesgue constant never drops below one") {
  for (int n : {1, 4, 9, 17}) {
    CAPTURE(n);
    const auto nodes = make_nodes(NodeSource::chebyshev, parse_domain("0,1"), n);
    const LebesgueReport rep = lebesgue_constant(nodes, parse_domain("0,1"), 10);
    CHECK(rep.lambda >= 1.0);
    CHECK(rep.lambda < 5.0);
  }
  CHECK_THROWS_AS((void)lebesgue_constant(std::vector<double>{0.0, 1.0},
                                          parse_domain("0,1"), 5),
                  std::invalid_argument);
}

TEST_CASE("greedy nodes keep the constant growth tame") {
  const DomainSpec dom = parse_domain("0,1");
  const auto nodes = make_nodes(NodeSource::fast_leja, dom, 16);
  const LebesgueReport rep = lebesgue_constant(nodes, dom, 10);
  CHECK(std::pow(rep.lambda, 1.0 / 16.0) == doctest::Approx(1.11528).epsilon(1e-3));
}

TEST_CASE("union domains restrict the Lebesgue scan to the parts") {
  const DomainSpec dom = parse_domain("0,0.3;0.5,1");
  const auto nodes = make_nodes(NodeSource::fast_leja, dom, 10);
  const LebesgueReport rep = lebesgue_constant(nodes, dom, 10);
  CHECK(rep.lambda >= 1.0);
  const bool inside = (rep.argmax_x >= 0.0 && rep.argmax_x <= 0.3) ||
                      (rep.argmax_x >= 0.5 && rep.argmax_x <= 1.0);
  CHECK(inside);
}

TEST_CASE("node sources parse and print consistently") {
  NodeSource src{};
  CHECK(parse_node_source("fast-leja", src));
  CHECK(src == NodeSource::fast_leja);
  CHECK(parse_node_source("true-leja", src));
  CHECK(src == NodeSource::true_leja);
  CHECK(parse_node_source("chebyshev", src));
  CHECK(src == NodeSource::chebyshev);
  CHECK(parse_node_source("equispaced", src));
  CHECK(src == NodeSource::equispaced);
  CHECK_FALSE(parse_node_source("bogus", src));
  for (NodeSource s : {NodeSource::fast_leja, NodeSource::true_leja,
                       NodeSource::chebyshev, NodeSource::equispaced}) {
    NodeSource back{};
    CHECK(parse_node_source(node_source_name(s), back));
    CHECK(back == s);
  }
}

TEST_CASE("node families land where expected") {
  const DomainSpec dom = parse_domain("0,1");
  CHECK(make_nodes(NodeSource::fast_leja, dom, 5) ==
        std::vector<double>{0.0, 1.0, 0.5, 0.25, 0.75});
  const auto ch3 = make_nodes(NodeSource::chebyshev, dom, 3);
  REQUIRE(ch3.size() == 3);
  CHECK(ch3[0] == 0.0);
  CHECK(ch3[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ch3[2] == 1.0);
  CHECK(make_nodes(NodeSource::chebyshev, dom, 1) == std::vector<double>{0.5});
  const auto eq = make_nodes(NodeSource::equispaced, parse_domain("2,4"), 5);
  CHECK(eq == std::vector<double>{2.0, 2.5, 3.0, 3.5, 4.0});
  const auto tl = make_nodes(NodeSource::true_leja, dom, 3);
  REQUIRE(tl.size() == 3);
  CHECK(tl[0] == 0.0);
  CHECK(tl[1] == 1.0);
  CHECK(tl[2] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK_THROWS_AS((void)make_nodes(NodeSource::chebyshev, parse_domain("0,0.3;0.5,1"), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)make_nodes(NodeSource::equispaced, parse_domain("0,0.3;0.5,1"), 4),
                  std::invalid_argument);
}

TEST_CASE("low-degree targets are interpolated to rounding") {
  const auto rows = error_study("cube", NodeSource::fast_leja, std::vector<int>{5},
                                parse_domain("0,1"));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].first == 5);
  CHECK(rows[0].second <= 1e-12);
}

TEST_CASE("smooth pole targets converge fast on greedy nodes") {
  const auto rows = error_study("pole2", NodeSource::fast_leja,
                                std::vector<int>{5, 10, 20}, parse_domain("0,1"));
  REQUIRE(rows.size() == 3);
  CHECK(rows[2].second < rows[0].second);
  CHECK(rows[2].second <= 1e-8);
  for (const auto& [n, err] : rows) {
    CAPTURE(n);
    CHECK(err > 0.0);
    CHECK(std::isfinite(err));
  }
}

TEST_CASE("greedy nodes dodge the equispaced blowup on the steep bump") {
  const DomainSpec dom = parse_domain("0,1");
  const auto greedy =
      error_study("runge25", NodeSource::fast_leja, std::vector<int>{15}, dom);
  const auto equi =
      error_study("runge25", NodeSource::equispaced, std::vector<int>{15}, dom);
  CHECK(greedy[0].second < 0.5 * equi[0].second);
}

TEST_CASE("study and constant CSV schemas") {
  const auto rows = error_study("exp", NodeSource::fast_leja, std::vector<int>{3, 5},
                                parse_domain("0,1"));
  const std::string csv = error_study_csv(rows);
  CHECK(csv.rfind("n,sup_error\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  std::vector<LebesgueReport> reps;
  reps.push_back(lebesgue_constant(std::vector<double>{0.0, 1.0}, parse_domain("0,1"), 10));
  const std::string lcsv = lebesgue_csv(reps);
  CHECK(lcsv.rfind("n,lambda,lambda_nth_root,argmax_x\n", 0) == 0);
  CHECK(std::count(lcsv.begin(), lcsv.end(), '\n') == 2);
  CHECK(lcsv.find("\n2,1,1,") != std::string::npos);
}
