#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crenrich/elements.hpp"
#include "crenrich/mesh.hpp"

namespace crenrich {

enum class SchemeKind { CR, CAlpha, EBeta };

/// Which local operator to apply: plain Crouzeix-Raviart, or one of the two
/// quadratic enrichments with its parameter.
class Scheme {
 public:
  static Scheme cr(int dof_nodes = kDefaultDofNodes);
  static Scheme c_alpha(double alpha, int dof_nodes = kDefaultDofNodes);
  static Scheme e_beta(double beta, int dof_nodes = kDefaultDofNodes);

  /// Parses "cr", "c-alpha[:value]" or "e-beta[:value]" (default value 1).
  static Scheme parse(const std::string& text, int dof_nodes = kDefaultDofNodes);

  SchemeKind kind() const { return kind_; }
  double parameter() const { return param_; }
  int dof_nodes() const { return dof_nodes_; }
  bool enriched() const { return kind_ != SchemeKind::CR; }
  std::size_t coefficient_count() const { return enriched() ? 6 : 3; }

  /// "cr", "c-alpha" or "e-beta".
  std::string family_name() const;
  /// family_name plus ":<param>" for enriched schemes.
  std::string label() const;

  friend bool operator==(const Scheme&, const Scheme&) = default;

 private:
  Scheme(SchemeKind kind, double param, int dof_nodes);

  SchemeKind kind_;
  double param_;
  int dof_nodes_;
};

/// One triangle's approximation. CR coefficients are edge means in the
/// theta basis; enriched coefficients are AF3 coordinates (vertex values
/// then edge means).
struct LocalInterpolant {
  std::size_t tri_index = 0;
  Scheme scheme = Scheme::cr();
  std::vector<double> coeffs;

  double value(const Barycentric& b) const;
  QuadOnTri as_quadratic() const;
};

/// Applies one scheme triangle after triangle. Holds the quadrature rules
/// and the basis coefficients so they are built once.
class Interpolator {
 public:
  explicit Interpolator(Scheme scheme);

  const Scheme& scheme() const { return scheme_; }

  LocalInterpolant interpolate(const Triangle2D& tri, const ScalarField& f,
                               std::size_t tri_index = 0) const;

  /// The scheme's degrees of freedom of f: the three edge means, then (for
  /// enriched schemes) the three weighted segment integrals.
  std::vector<double> dofs(const Triangle2D& tri, const ScalarField& f) const;

 private:
  Scheme scheme_;
  QuadratureRule unit_;
  QuadratureRule weighted_;
  EnrichedBasis basis_;
};

LocalInterpolant interpolate_local(const Triangle2D& tri, const Scheme& scheme,
                                   const ScalarField& f);

/// Throws DomainError when p lies outside tri by more than 1e-10 in any
/// barycentric coordinate.
double evaluate_local(const LocalInterpolant& interp, const Triangle2D& tri, Point2D p);

/// Max over the scheme's DoFs of |DoF(interp) - DoF(f)|.
double dof_consistency(const LocalInterpolant& interp, const Triangle2D& tri, const Scheme& scheme,
                       const ScalarField& f);

/// Piecewise approximant over a mesh, one independent local interpolant per
/// triangle. Keeps a reference to the mesh, which must outlive it.
class GlobalApproximant {
 public:
  GlobalApproximant(const TriMesh& mesh, Scheme scheme, std::vector<LocalInterpolant> locals);

  const TriMesh& mesh() const { return *mesh_; }
  const Scheme& scheme() const { return scheme_; }
  const std::vector<LocalInterpolant>& locals() const { return locals_; }
  std::size_t size() const { return locals_.size(); }

  /// Value at p using the lowest-index triangle containing it, nullopt
  /// outside the mesh.
  std::optional<double> evaluate(Point2D p) const;

 private:
  const TriMesh* mesh_;
  Scheme scheme_;
  std::vector<LocalInterpolant> locals_;
};

GlobalApproximant interpolate_global(const TriMesh& mesh, const Scheme& scheme,
                                     const ScalarField& f);

}  // namespace crenrich
