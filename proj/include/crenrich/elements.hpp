#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>

#include "crenrich/geometry.hpp"
#include "crenrich/quadrature.hpp"

namespace crenrich {

using ScalarField = std::function<double(Point2D)>;

// ---------------------------------------------------------------------------
// Parameters

enum class Family { CAlpha, EBeta };

/// The parameter alpha = -6/7 makes the C_alpha system singular. Values
/// within this distance of it are rejected.
inline constexpr double kSingularAlpha = -6.0 / 7.0;
inline constexpr double kSingularAlphaTolerance = 1e-9;

struct FamilyParameter {
  Family family = Family::CAlpha;
  double value = 1.0;
};

/// Throws DomainError for value <= -1 and SingularFamilyError for
/// C_alpha parameters too close to -6/7.
void validate(const FamilyParameter& p);

// ---------------------------------------------------------------------------
// Closed-form constants

/// Constants of the C_alpha family.
struct CAlphaCoefficients {
  double alpha;
  double gamma;  ///< B(alpha + 2, alpha + 1)
  double h;      ///< -(5 alpha + 6) / (4 (2 alpha + 3))
  double K;      ///< -alpha / (2 alpha + 3)
  double c;      ///< psi_i(v_i)
  double d;      ///< psi_i(v_k), k != i
  double L;      ///< (K - h)(K + 2h)
  double det;    ///< determinant of gamma [[K,h,h],[h,K,h],[h,h,K]]
};

/// Constants of the E_beta family.
struct EBetaCoefficients {
  double beta;
  double nu;     ///< B(beta + 2, beta + 1) / (3 (2 beta + 3))
  double sigma;  ///< 3 beta + 4
  double r;      ///< tau_i(v_i)
  double m;      ///< tau_i(v_k), k != i
  double L;      ///< 18 (beta + 1)(beta + 2)
  double det;    ///< determinant of nu [[2,-s,-s],[-s,2,-s],[-s,-s,2]]
};

CAlphaCoefficients coeffs_c_alpha(double alpha);
EBetaCoefficients coeffs_e_beta(double beta);

/// Closed-form 3x3 matrices mapping vertex values of a quadratic with
/// vanishing edge means onto its three enriched functionals.
Eigen::Matrix3d system_matrix(const CAlphaCoefficients& c);
Eigen::Matrix3d system_matrix(const EBetaCoefficients& c);

// ---------------------------------------------------------------------------
// AF3 basis and quadratics on a triangle

/// phi_i = lambda_i (3 lambda_i - 2): vertex-dual, zero edge means.
double af3_phi(const Barycentric& b, int i);
/// varphi_i = 6 lambda_{i+1} lambda_{i+2}: edge-mean dual, zero at vertices.
double af3_bubble(const Barycentric& b, int i);
double af3_phi(const Triangle2D& tri, int i, Point2D p);
double af3_bubble(const Triangle2D& tri, int i, Point2D p);

/// Quadratic polynomial stored by its AF3 coordinates,
/// p = sum a_i phi_i + sum b_i varphi_i. Coordinates are the vertex values
/// (a) and the edge means (b), so values depend only on barycentric
/// coordinates and the same object is meaningful on any triangle.
struct QuadOnTri {
  std::array<double, 3> vertex{};  // a_i
  std::array<double, 3> edge{};    // b_i

  double operator()(const Barycentric& b) const;
  double at(const Triangle2D& tri, Point2D p) const { return (*this)(tri.barycentric(p)); }
  ScalarField on(const Triangle2D& tri) const;

  QuadOnTri& operator+=(const QuadOnTri& o);
  friend QuadOnTri operator*(double s, QuadOnTri q);
  friend QuadOnTri operator+(QuadOnTri a, const QuadOnTri& b) { return a += b; }
};

/// Linear polynomial p = sum c_k lambda_k.
struct LinOnTri {
  std::array<double, 3> coeffs{};
  double operator()(const Barycentric& b) const;
  double at(const Triangle2D& tri, Point2D p) const { return (*this)(tri.barycentric(p)); }
};

/// A basis made of a triple dual to the edge means plus a triple dual to the
/// enriched functionals.
struct EnrichedBasis {
  std::array<QuadOnTri, 3> edge_dual;      // psi_i or tau_i
  std::array<QuadOnTri, 3> enriched_dual;  // zeta_i or rho_i
};

EnrichedBasis basis_c_alpha(double alpha);
EnrichedBasis basis_e_beta(double beta);
/// Build from an explicit constant ledger (used to test altered constants).
EnrichedBasis basis_c_alpha(const CAlphaCoefficients& c);
EnrichedBasis basis_e_beta(const EBetaCoefficients& c);
/// Standard CR basis theta_j = 1 - 2 lambda_j.
std::array<LinOnTri, 3> basis_cr();

// ---------------------------------------------------------------------------
// Degrees of freedom

/// Sum w_i f(t_i a + (1 - t_i) b) for the nodes and weights of `rule`.
double segment_functional(Point2D a, Point2D b, const ScalarField& f, const QuadratureRule& rule);

/// Mean of f over edge j: integral over t of f(t v_{j+1} + (1-t) v_{j+2}).
double dof_cr(const Triangle2D& tri, int j, const ScalarField& f, const QuadratureRule& rule);

/// Weighted integral of f over the segment from v_j to m_j with weight
/// t^alpha (1-t)^alpha. `rule` must be a Gauss-Jacobi rule for alpha.
double dof_f_enr(const Triangle2D& tri, int j, double alpha, const ScalarField& f,
                 const QuadratureRule& rule);

/// Weighted integral of f over the segment from v_j to the centroid with
/// weight t^beta (1-t)^beta. `rule` must be a Gauss-Jacobi rule for beta.
double dof_g_enr(const Triangle2D& tri, int j, double beta, const ScalarField& f,
                 const QuadratureRule& rule);

/// Point evaluation at vertex j.
double dof_vertex(const Triangle2D& tri, int j, const ScalarField& f);

// ---------------------------------------------------------------------------
// Unisolvence

using Matrix6 = Eigen::Matrix<double, 6, 6>;

/// DoFs (I_1..3, then F_1..3 or G_1..3) applied to
/// {lambda_1, lambda_2, lambda_3, lambda_1^2, lambda_2^2, lambda_3^2}.
Matrix6 unisolvence_matrix(const Triangle2D& tri, const FamilyParameter& p,
                           int quad_nodes = kDefaultDofNodes);

/// Same, without parameter validation, so the singular parameter can be
/// probed.
Matrix6 unisolvence_matrix_unchecked(const Triangle2D& tri, const FamilyParameter& p,
                                     int quad_nodes = kDefaultDofNodes);

/// Entry (j, k) is the enriched functional j applied to phi_k, computed by
/// quadrature. No parameter validation.
Eigen::Matrix3d numeric_system_matrix(const Triangle2D& tri, const FamilyParameter& p,
                                      int quad_nodes = kDefaultDofNodes);

}  // namespace crenrich
