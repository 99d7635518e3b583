#pragma once

#include <functional>
#include <vector>

#include "crenrich/geometry.hpp"

namespace crenrich {

// ---------------------------------------------------------------------------
// Special functions

/// Natural log of the gamma function for x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

/// Euler beta function B(z1, z2) = Gamma(z1) Gamma(z2) / Gamma(z1 + z2),
/// evaluated in log space. Both arguments must be positive.
double beta(double z1, double z2);

// ---------------------------------------------------------------------------
// Rules on [0, 1]

/// Gauss rule on [0, 1] for the weight t^a (1 - t)^a. The unit weight is the
/// special case a = 0.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double weight_exponent = 0.0;

  bool is_unit_weight() const { return weight_exponent == 0.0; }
  std::size_t size() const { return nodes.size(); }

  /// Sum of w_i f(t_i).
  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

inline constexpr int kMaxGaussNodes = 64;
inline constexpr int kDefaultDofNodes = 16;

/// n-point Gauss-Legendre rule on [0, 1], exact through degree 2n - 1.
QuadratureRule gauss_legendre(int n);

/// n-point Gauss-Jacobi rule on [0, 1] for t^alpha (1 - t)^alpha, exact
/// through degree 2n - 1. Nodes come from the eigenvalues of the symmetric
/// Jacobi matrix of the three-term recurrence; weights from the first
/// eigenvector components scaled by the weight's mass B(alpha+1, alpha+1).
QuadratureRule gauss_jacobi(int n, double alpha);

// ---------------------------------------------------------------------------
// Triangles

/// Composite rule: the base rule of exactness `base_degree` applied on each
/// of the 4^subdivision_level congruent pieces of the triangle. Degree 5 is
/// Radon's 7-point rule; higher degrees use a collapsed Gauss product. The
/// default degree 7 (25 points per piece) resolves the kinks of |f - Pi f|
/// well enough that one more subdivision level moves L1 errors by < 0.2%.
struct TriangleRuleConfig {
  int base_degree = 7;
  int subdivision_level = 2;
};

/// A composite rule on the reference triangle stored in barycentric
/// coordinates. Weights sum to 1, so integrals scale with the triangle area.
class TriangleRule {
 public:
  explicit TriangleRule(TriangleRuleConfig cfg = {});

  const std::vector<Barycentric>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  const TriangleRuleConfig& config() const { return cfg_; }

  /// Integral of f(p) over tri.
  template <class F>
  double integrate(const Triangle2D& tri, F&& f) const {
    double sum = 0.0;
    for (std::size_t q = 0; q < points_.size(); ++q) {
      sum += weights_[q] * f(tri.from_barycentric(points_[q]));
    }
    return tri.area() * sum;
  }

  /// Integral of g(p, lambda(p)) over tri, for integrands that are cheaper
  /// to evaluate from barycentric coordinates.
  template <class G>
  double integrate_bary(const Triangle2D& tri, G&& g) const {
    double sum = 0.0;
    for (std::size_t q = 0; q < points_.size(); ++q) {
      sum += weights_[q] * g(tri.from_barycentric(points_[q]), points_[q]);
    }
    return tri.area() * sum;
  }

 private:
  TriangleRuleConfig cfg_;
  std::vector<Barycentric> points_;
  std::vector<double> weights_;
};

double integrate_on_triangle(const Triangle2D& tri, const std::function<double(Point2D)>& f,
                             const TriangleRuleConfig& cfg = {});

}  // namespace crenrich
