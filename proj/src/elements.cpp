#include "crenrich/elements.hpp"

#include <cmath>
#include <string>

#include "crenrich/errors.hpp"

namespace crenrich {

namespace {

void check_index(int i) {
  if (i < 1 || i > 3) throw ArgumentError("local index must be in 1..3, got " + std::to_string(i));
}

void check_weight(const QuadratureRule& rule, double exponent, const char* functional) {
  if (std::abs(rule.weight_exponent - exponent) > 1e-14 * std::max(1.0, std::abs(exponent))) {
    throw MisuseError(std::string(functional) + " needs a rule for weight exponent " +
                      std::to_string(exponent) + ", got " + std::to_string(rule.weight_exponent));
  }
}

}  // namespace

void validate(const FamilyParameter& p) {
  const char* name = p.family == Family::CAlpha ? "alpha" : "beta";
  if (!(p.value > -1.0) || !std::isfinite(p.value)) {
    throw DomainError(std::string(name) + " must be a finite real > -1, got " +
                      std::to_string(p.value));
  }
  if (p.family == Family::CAlpha && std::abs(p.value - kSingularAlpha) <= kSingularAlphaTolerance) {
    throw SingularFamilyError("parameter -6/7 excluded: the C_alpha functionals are not "
                              "unisolvent at alpha = -6/7");
  }
}

CAlphaCoefficients coeffs_c_alpha(double alpha) {
  validate({Family::CAlpha, alpha});
  const double a = alpha;
  const double s = 2.0 * a + 3.0;
  const double q = (a + 6.0) * (7.0 * a + 6.0);
  CAlphaCoefficients c{};
  c.alpha = a;
  c.gamma = beta(a + 2.0, a + 1.0);
  c.h = -(5.0 * a + 6.0) / (4.0 * s);
  c.K = -a / s;
  c.c = 3.0 * (11.0 * a * a + 20.0 * a + 12.0) / q;
  c.d = 3.0 * (-3.0 * a * a + 8.0 * a + 12.0) / q;
  c.L = -q / (8.0 * s * s);
  c.det = -std::pow(c.gamma, 3) * (6.0 + a) * (6.0 + a) * (6.0 + 7.0 * a) / (32.0 * s * s * s);
  return c;
}

EBetaCoefficients coeffs_e_beta(double beta_) {
  validate({Family::EBeta, beta_});
  const double b = beta_;
  EBetaCoefficients c{};
  c.beta = b;
  c.nu = beta(b + 2.0, b + 1.0) / (3.0 * (2.0 * b + 3.0));
  c.sigma = 3.0 * b + 4.0;
  c.L = 18.0 * (b + 1.0) * (b + 2.0);
  c.r = 6.0 * (7.0 * b * b + 18.0 * b + 12.0) / c.L;
  c.m = 6.0 * (b * b + 6.0 * b + 6.0) / c.L;
  c.det = -54.0 * std::pow(c.nu, 3) * (b + 1.0) * (b + 2.0) * (b + 2.0);
  return c;
}

Eigen::Matrix3d system_matrix(const CAlphaCoefficients& c) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Constant(c.h);
  m.diagonal().setConstant(c.K);
  return c.gamma * m;
}

Eigen::Matrix3d system_matrix(const EBetaCoefficients& c) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Constant(-c.sigma);
  m.diagonal().setConstant(2.0);
  return c.nu * m;
}

// ---------------------------------------------------------------------------

double af3_phi(const Barycentric& b, int i) {
  check_index(i);
  const double l = b(i);
  return l * (1.0 - 3.0 * b(i + 1) - 3.0 * b(i + 2));
}

double af3_bubble(const Barycentric& b, int i) {
  check_index(i);
  return 6.0 * b(i + 1) * b(i + 2);
}

double af3_phi(const Triangle2D& tri, int i, Point2D p) { return af3_phi(tri.barycentric(p), i); }

double af3_bubble(const Triangle2D& tri, int i, Point2D p) {
  return af3_bubble(tri.barycentric(p), i);
}

double QuadOnTri::operator()(const Barycentric& b) const {
  const double l1 = b.l1, l2 = b.l2, l3 = b.l3;
  return vertex[0] * l1 * (1.0 - 3.0 * (l2 + l3)) + vertex[1] * l2 * (1.0 - 3.0 * (l3 + l1)) +
         vertex[2] * l3 * (1.0 - 3.0 * (l1 + l2)) +
         6.0 * (edge[0] * l2 * l3 + edge[1] * l3 * l1 + edge[2] * l1 * l2);
}

ScalarField QuadOnTri::on(const Triangle2D& tri) const {
  return [q = *this, tri](Point2D p) { return q.at(tri, p); };
}

QuadOnTri& QuadOnTri::operator+=(const QuadOnTri& o) {
  for (int k = 0; k < 3; ++k) {
    vertex[k] += o.vertex[k];
    edge[k] += o.edge[k];
  }
  return *this;
}

QuadOnTri operator*(double s, QuadOnTri q) {
  for (int k = 0; k < 3; ++k) {
    q.vertex[k] *= s;
    q.edge[k] *= s;
  }
  return q;
}

double LinOnTri::operator()(const Barycentric& b) const {
  return coeffs[0] * b.l1 + coeffs[1] * b.l2 + coeffs[2] * b.l3;
}

namespace {

// a phi_i + b sum_{k != i} phi_k + e varphi_i.
QuadOnTri af3_combination(int i, double own, double others, double bubble) {
  QuadOnTri q;
  for (int k = 0; k < 3; ++k) q.vertex[k] = k == i ? own : others;
  q.edge[i] = bubble;
  return q;
}

}  // namespace

EnrichedBasis basis_c_alpha(double alpha) { return basis_c_alpha(coeffs_c_alpha(alpha)); }

EnrichedBasis basis_c_alpha(const CAlphaCoefficients& c) {
  const double scale = 1.0 / (c.gamma * c.L);
  EnrichedBasis basis;
  for (int i = 0; i < 3; ++i) {
    basis.edge_dual[i] = af3_combination(i, c.c, c.d, 1.0);
    basis.enriched_dual[i] = af3_combination(i, scale * (c.K + c.h), -scale * c.h, 0.0);
  }
  return basis;
}

EnrichedBasis basis_e_beta(double beta) { return basis_e_beta(coeffs_e_beta(beta)); }

EnrichedBasis basis_e_beta(const EBetaCoefficients& c) {
  const double scale = 1.0 / (c.nu * c.L);
  EnrichedBasis basis;
  for (int i = 0; i < 3; ++i) {
    basis.edge_dual[i] = af3_combination(i, c.r, c.m, 1.0);
    basis.enriched_dual[i] = af3_combination(i, scale * (c.sigma - 2.0), -scale * c.sigma, 0.0);
  }
  return basis;
}

std::array<LinOnTri, 3> basis_cr() {
  std::array<LinOnTri, 3> theta;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) theta[j].coeffs[k] = j == k ? -1.0 : 1.0;
  }
  return theta;
}

// ---------------------------------------------------------------------------

double segment_functional(Point2D a, Point2D b, const ScalarField& f, const QuadratureRule& rule) {
  return rule.integrate([&](double t) { return f(t * a + (1.0 - t) * b); });
}

double dof_cr(const Triangle2D& tri, int j, const ScalarField& f, const QuadratureRule& rule) {
  check_index(j);
  if (!rule.is_unit_weight()) {
    throw MisuseError("edge mean needs a unit-weight rule, got weight exponent " +
                      std::to_string(rule.weight_exponent));
  }
  return segment_functional(tri.vertex(j + 1), tri.vertex(j + 2), f, rule);
}

double dof_f_enr(const Triangle2D& tri, int j, double alpha, const ScalarField& f,
                 const QuadratureRule& rule) {
  check_index(j);
  check_weight(rule, alpha, "F functional");
  return segment_functional(tri.vertex(j), tri.midpoint(j), f, rule);
}

double dof_g_enr(const Triangle2D& tri, int j, double beta, const ScalarField& f,
                 const QuadratureRule& rule) {
  check_index(j);
  check_weight(rule, beta, "G functional");
  return segment_functional(tri.vertex(j), tri.centroid(), f, rule);
}

double dof_vertex(const Triangle2D& tri, int j, const ScalarField& f) {
  check_index(j);
  return f(tri.vertex(j));
}

// ---------------------------------------------------------------------------

namespace {

double enriched_dof(const Triangle2D& tri, int j, const FamilyParameter& p, const ScalarField& f,
                    const QuadratureRule& rule) {
  return p.family == Family::CAlpha ? dof_f_enr(tri, j, p.value, f, rule)
                                    : dof_g_enr(tri, j, p.value, f, rule);
}

}  // namespace

Matrix6 unisolvence_matrix_unchecked(const Triangle2D& tri, const FamilyParameter& p,
                                     int quad_nodes) {
  const auto unit = gauss_legendre(quad_nodes);
  const auto weighted = gauss_jacobi(quad_nodes, p.value);
  Matrix6 m;
  for (int col = 0; col < 6; ++col) {
    const int i = col % 3 + 1;
    const int power = col < 3 ? 1 : 2;
    const ScalarField basis = [&tri, i, power](Point2D x) {
      return std::pow(tri.barycentric(x)(i), power);
    };
    for (int j = 1; j <= 3; ++j) {
      m(j - 1, col) = dof_cr(tri, j, basis, unit);
      m(j + 2, col) = enriched_dof(tri, j, p, basis, weighted);
    }
  }
  return m;
}

Matrix6 unisolvence_matrix(const Triangle2D& tri, const FamilyParameter& p, int quad_nodes) {
  validate(p);
  return unisolvence_matrix_unchecked(tri, p, quad_nodes);
}

Eigen::Matrix3d numeric_system_matrix(const Triangle2D& tri, const FamilyParameter& p,
                                      int quad_nodes) {
  const auto weighted = gauss_jacobi(quad_nodes, p.value);
  Eigen::Matrix3d m;
  for (int k = 1; k <= 3; ++k) {
    const ScalarField phi = [&tri, k](Point2D x) { return af3_phi(tri, k, x); };
    for (int j = 1; j <= 3; ++j) m(j - 1, k - 1) = enriched_dof(tri, j, p, phi, weighted);
  }
  return m;
}

}  // namespace crenrich
