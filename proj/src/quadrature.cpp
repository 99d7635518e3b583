#include "crenrich/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "crenrich/errors.hpp"

namespace crenrich {

namespace {

void check_node_count(int n) {
  if (n < 1 || n > kMaxGaussNodes) {
    throw ArgumentError("Gauss rule needs 1 <= n <= " + std::to_string(kMaxGaussNodes) +
                        ", got " + std::to_string(n));
  }
}

}  // namespace

QuadratureRule gauss_jacobi(int n, double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("Jacobi weight exponent must be > -1, got " + std::to_string(alpha));
  }
  check_node_count(n);

  // Symmetric Jacobi matrix for P_k^(a,a) on [-1, 1]. The diagonal vanishes
  // for a symmetric weight; the first off-diagonal entry is written in its
  // reduced form so that a = -1/2 does not hit 0/0.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) {
    double b2 = 0.0;
    if (k == 1) {
      b2 = 1.0 / (2.0 * alpha + 3.0);
    } else {
      const double s = 2.0 * (k + alpha);
      b2 = k * (k + 2.0 * alpha) / ((s - 1.0) * (s + 1.0));
    }
    sub(k - 1) = std::sqrt(b2);
  }

  QuadratureRule rule;
  rule.weight_exponent = alpha;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mass = beta(alpha + 1.0, alpha + 1.0);

  if (n == 1) {
    rule.nodes[0] = 0.5;
    rule.weights[0] = mass;
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Golub-Welsch eigen solve did not converge");
  }
  const auto& x = solver.eigenvalues();
  const auto& v = solver.eigenvectors();
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (x(i) + 1.0);
    rule.weights[i] = mass * v(0, i) * v(0, i);
  }
  // Enforce the exact mirror symmetry of the weight.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double t = 0.5 * (rule.nodes[i] + (1.0 - rule.nodes[j]));
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = t;
    rule.nodes[j] = 1.0 - t;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.5;
  return rule;
}

QuadratureRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0); }

// ---------------------------------------------------------------------------

namespace {

struct BaseRule {
  std::vector<Barycentric> points;
  std::vector<double> weights;
};

// Radon's 7-point rule, exact through degree 5.
BaseRule symmetric_degree5() {
  const double r = std::sqrt(15.0);
  const double a1 = (6.0 - r) / 21.0;
  const double a2 = (6.0 + r) / 21.0;
  const double w1 = (155.0 - r) / 1200.0;
  const double w2 = (155.0 + r) / 1200.0;
  BaseRule rule;
  rule.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  rule.weights.push_back(9.0 / 40.0);
  for (auto [a, w] : {std::pair{a1, w1}, std::pair{a2, w2}}) {
    const double b = 1.0 - 2.0 * a;
    rule.points.push_back({b, a, a});
    rule.points.push_back({a, b, a});
    rule.points.push_back({a, a, b});
    rule.weights.insert(rule.weights.end(), 3, w);
  }
  return rule;
}

// Collapsed (Duffy) product of Gauss-Legendre rules, exact through `degree`.
BaseRule collapsed_product(int degree) {
  const int n = (degree + 3) / 2;
  const auto gl = gauss_legendre(n);
  BaseRule rule;
  for (int i = 0; i < n; ++i) {
    const double u = gl.nodes[i];
    for (int j = 0; j < n; ++j) {
      const double v = gl.nodes[j];
      const double xi = u;
      const double eta = (1.0 - u) * v;
      rule.points.push_back({1.0 - xi - eta, xi, eta});
      rule.weights.push_back(2.0 * gl.weights[i] * gl.weights[j] * (1.0 - u));
    }
  }
  return rule;
}

}  // namespace

TriangleRule::TriangleRule(TriangleRuleConfig cfg) : cfg_(cfg) {
  if (cfg.base_degree < 5) {
    throw ArgumentError("triangle rule base degree must be >= 5, got " +
                        std::to_string(cfg.base_degree));
  }
  if (cfg.subdivision_level < 0 || cfg.subdivision_level > 8) {
    throw ArgumentError("triangle subdivision level must be in 0..8, got " +
                        std::to_string(cfg.subdivision_level));
  }
  const BaseRule base =
      cfg.base_degree == 5 ? symmetric_degree5() : collapsed_product(cfg.base_degree);

  // Uniform red refinement of the reference triangle into m^2 pieces, in
  // (xi, eta) = (lambda2, lambda3) lattice coordinates.
  const int m = 1 << cfg.subdivision_level;
  const double h = 1.0 / m;
  const double piece = 1.0 / (static_cast<double>(m) * m);
  auto emit = [&](std::array<std::pair<double, double>, 3> c) {
    for (std::size_t q = 0; q < base.points.size(); ++q) {
      const auto& b = base.points[q];
      const double xi = b.l1 * c[0].first + b.l2 * c[1].first + b.l3 * c[2].first;
      const double eta = b.l1 * c[0].second + b.l2 * c[1].second + b.l3 * c[2].second;
      points_.push_back({1.0 - xi - eta, xi, eta});
      weights_.push_back(piece * base.weights[q]);
    }
  };
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i + j < m; ++i) {
      const double x0 = i * h, y0 = j * h;
      emit({std::pair{x0, y0}, std::pair{x0 + h, y0}, std::pair{x0, y0 + h}});
      if (i + j < m - 1) {
        emit({std::pair{x0 + h, y0}, std::pair{x0 + h, y0 + h}, std::pair{x0, y0 + h}});
      }
    }
  }
}

double integrate_on_triangle(const Triangle2D& tri, const std::function<double(Point2D)>& f,
                             const TriangleRuleConfig& cfg) {
  return TriangleRule(cfg).integrate(tri, f);
}

}  // namespace crenrich
