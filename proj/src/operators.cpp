#include "crenrich/operators.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "crenrich/errors.hpp"

namespace crenrich {

Scheme::Scheme(SchemeKind kind, double param, int dof_nodes)
    : kind_(kind), param_(param), dof_nodes_(dof_nodes) {
  if (dof_nodes < 1 || dof_nodes > kMaxGaussNodes) {
    throw ArgumentError("DoF quadrature order must be in 1.." + std::to_string(kMaxGaussNodes) +
                        ", got " + std::to_string(dof_nodes));
  }
  if (kind == SchemeKind::CAlpha) validate({Family::CAlpha, param});
  if (kind == SchemeKind::EBeta) validate({Family::EBeta, param});
}

Scheme Scheme::cr(int dof_nodes) { return {SchemeKind::CR, 0.0, dof_nodes}; }
Scheme Scheme::c_alpha(double alpha, int dof_nodes) {
  return {SchemeKind::CAlpha, alpha, dof_nodes};
}
Scheme Scheme::e_beta(double beta, int dof_nodes) { return {SchemeKind::EBeta, beta, dof_nodes}; }

Scheme Scheme::parse(const std::string& text, int dof_nodes) {
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  double value = 1.0;
  if (colon != std::string::npos) {
    const std::string rest = text.substr(colon + 1);
    const auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (rest.empty() || ec != std::errc{} || p != rest.data() + rest.size()) {
      throw ArgumentError("bad scheme parameter in '" + text + "'");
    }
  }
  if (family == "cr") {
    if (colon != std::string::npos) throw ArgumentError("scheme 'cr' takes no parameter");
    return cr(dof_nodes);
  }
  if (family == "c-alpha") return c_alpha(value, dof_nodes);
  if (family == "e-beta") return e_beta(value, dof_nodes);
  throw ArgumentError("unknown scheme '" + text + "' (expected cr, c-alpha[:a], e-beta[:b])");
}

std::string Scheme::family_name() const {
  switch (kind_) {
    case SchemeKind::CR:
      return "cr";
    case SchemeKind::CAlpha:
      return "c-alpha";
    default:
      return "e-beta";
  }
}

std::string Scheme::label() const {
  if (!enriched()) return family_name();
  std::ostringstream out;
  out << family_name() << ':' << param_;
  return out.str();
}

// ---------------------------------------------------------------------------

double LocalInterpolant::value(const Barycentric& b) const {
  if (coeffs.size() == 3) return coeffs[0] * (1.0 - 2.0 * b.l1) + coeffs[1] * (1.0 - 2.0 * b.l2) +
                                 coeffs[2] * (1.0 - 2.0 * b.l3);
  return as_quadratic()(b);
}

QuadOnTri LocalInterpolant::as_quadratic() const {
  QuadOnTri q;
  if (coeffs.size() == 3) {
    // theta_j = 1 - 2 lambda_j is linear: vertex values 1 - 2 delta, edge
    // means 1 - 2 * (0 or 1/2).
    for (int k = 0; k < 3; ++k) {
      for (int j = 0; j < 3; ++j) {
        q.vertex[k] += coeffs[j] * (j == k ? -1.0 : 1.0);
        q.edge[k] += coeffs[j] * (j == k ? 1.0 : 0.0);
      }
    }
    return q;
  }
  for (int k = 0; k < 3; ++k) {
    q.vertex[k] = coeffs[k];
    q.edge[k] = coeffs[k + 3];
  }
  return q;
}

Interpolator::Interpolator(Scheme scheme)
    : scheme_(scheme), unit_(gauss_legendre(scheme.dof_nodes())) {
  if (scheme_.kind() == SchemeKind::CAlpha) {
    weighted_ = gauss_jacobi(scheme_.dof_nodes(), scheme_.parameter());
    basis_ = basis_c_alpha(scheme_.parameter());
  } else if (scheme_.kind() == SchemeKind::EBeta) {
    weighted_ = gauss_jacobi(scheme_.dof_nodes(), scheme_.parameter());
    basis_ = basis_e_beta(scheme_.parameter());
  }
}

std::vector<double> Interpolator::dofs(const Triangle2D& tri, const ScalarField& f) const {
  std::vector<double> out;
  out.reserve(scheme_.coefficient_count());
  for (int j = 1; j <= 3; ++j) out.push_back(dof_cr(tri, j, f, unit_));
  const double p = scheme_.parameter();
  if (scheme_.kind() == SchemeKind::CAlpha) {
    for (int j = 1; j <= 3; ++j) out.push_back(dof_f_enr(tri, j, p, f, weighted_));
  } else if (scheme_.kind() == SchemeKind::EBeta) {
    for (int j = 1; j <= 3; ++j) out.push_back(dof_g_enr(tri, j, p, f, weighted_));
  }
  return out;
}

LocalInterpolant Interpolator::interpolate(const Triangle2D& tri, const ScalarField& f,
                                           std::size_t tri_index) const {
  LocalInterpolant out{tri_index, scheme_, {}};
  const auto d = dofs(tri, f);
  if (!scheme_.enriched()) {
    out.coeffs = d;
    return out;
  }
  QuadOnTri q;
  for (int j = 0; j < 3; ++j) {
    q += d[j] * basis_.edge_dual[j];
    q += d[j + 3] * basis_.enriched_dual[j];
  }
  out.coeffs = {q.vertex[0], q.vertex[1], q.vertex[2], q.edge[0], q.edge[1], q.edge[2]};
  return out;
}

LocalInterpolant interpolate_local(const Triangle2D& tri, const Scheme& scheme,
                                   const ScalarField& f) {
  return Interpolator(scheme).interpolate(tri, f);
}

double evaluate_local(const LocalInterpolant& interp, const Triangle2D& tri, Point2D p) {
  const Barycentric b = tri.barycentric(p);
  if (b.min() < -1e-10) {
    std::ostringstream msg;
    msg << "point (" << p.x << ", " << p.y << ") lies outside the triangle (barycentric "
        << b.l1 << ", " << b.l2 << ", " << b.l3 << ")";
    throw DomainError(msg.str());
  }
  return interp.value(b);
}

double dof_consistency(const LocalInterpolant& interp, const Triangle2D& tri, const Scheme& scheme,
                       const ScalarField& f) {
  const Interpolator op(scheme);
  const ScalarField pf = [&](Point2D x) { return interp.value(tri.barycentric(x)); };
  const auto a = op.dofs(tri, pf);
  const auto b = op.dofs(tri, f);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

// ---------------------------------------------------------------------------

GlobalApproximant::GlobalApproximant(const TriMesh& mesh, Scheme scheme,
                                     std::vector<LocalInterpolant> locals)
    : mesh_(&mesh), scheme_(scheme), locals_(std::move(locals)) {
  if (locals_.size() != mesh.size()) {
    throw ArgumentError("need one local interpolant per triangle");
  }
  for (std::size_t t = 0; t < locals_.size(); ++t) {
    if (locals_[t].tri_index != t || !(locals_[t].scheme == scheme_)) {
      throw ArgumentError("local interpolant " + std::to_string(t) +
                          " does not match its triangle or the scheme");
    }
  }
}

std::optional<double> GlobalApproximant::evaluate(Point2D p) const {
  const auto t = mesh_->locate(p);
  if (!t) return std::nullopt;
  return locals_[*t].value(mesh_->triangle(*t).barycentric(p));
}

GlobalApproximant interpolate_global(const TriMesh& mesh, const Scheme& scheme,
                                     const ScalarField& f) {
  const Interpolator op(scheme);
  std::vector<LocalInterpolant> locals;
  locals.reserve(mesh.size());
  for (std::size_t t = 0; t < mesh.size(); ++t) {
    locals.push_back(op.interpolate(mesh.triangle(t), f, t));
  }
  return GlobalApproximant(mesh, scheme, std::move(locals));
}

}  // namespace crenrich
