#include "crenrich/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "crenrich/elements.hpp"
#include "crenrich/operators.hpp"

namespace crenrich {

bool VerificationSummary::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

Triangle2D random_triangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (;;) {
    const Point2D a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
    const double area2 = std::abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
    const double d = std::max({std::hypot(b.x - a.x, b.y - a.y), std::hypot(c.x - b.x, c.y - b.y),
                               std::hypot(a.x - c.x, a.y - c.y)});
    if (area2 > 0.1 * d * d) return Triangle2D(a, b, c);
  }
}

QuadOnTri random_quadratic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  QuadOnTri q;
  for (int k = 0; k < 3; ++k) {
    q.vertex[k] = u(rng);
    q.edge[k] = u(rng);
  }
  return q;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

class Battery {
 public:
  void record(std::string name, double residual, double tol) {
    checks_.push_back({std::move(name), residual <= tol && std::isfinite(residual), residual, tol});
  }
  VerificationSummary finish() { return {std::move(checks_)}; }

 private:
  std::vector<CheckResult> checks_;
};

// Max |DoF_j(basis_i) - expected_ij| over one basis triple.
double duality_residual(const Triangle2D& tri, const std::array<QuadOnTri, 3>& basis,
                        const std::function<double(int, const ScalarField&)>& dof, bool diagonal) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const ScalarField f = basis[i].on(tri);
    for (int j = 0; j < 3; ++j) {
      const double expected = diagonal && i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(dof(j + 1, f) - expected));
    }
  }
  return worst;
}

}  // namespace

VerificationSummary run_verification(const VerifyOptions& options) {
  Battery battery;
  const double alpha = options.alpha;
  const double beta_ = options.beta;
  std::mt19937_64 rng(options.seed);

  CAlphaCoefficients ca = coeffs_c_alpha(alpha);
  EBetaCoefficients eb = coeffs_e_beta(beta_);
  if (options.fault == InjectedFault::WrongSigmaBeta) eb.sigma += 0.5;
  const EnrichedBasis cb = basis_c_alpha(ca);
  const EnrichedBasis ebasis = basis_e_beta(eb);

  const auto unit = gauss_legendre(kDefaultDofNodes);
  const auto wa = gauss_jacobi(kDefaultDofNodes, alpha);
  const auto wb = gauss_jacobi(kDefaultDofNodes, beta_);

  // Beta function identities at the arguments the constants use.
  {
    double worst = 0.0;
    for (double z : {alpha + 1.0, alpha + 2.0, beta_ + 1.0, beta_ + 2.0}) {
      for (double w : {alpha + 1.0, beta_ + 1.0, 0.5, 3.25}) {
        worst = std::max(worst, rel(beta(z, w), beta(w, z)));
        worst = std::max(worst, rel(beta(z + 1.0, w), z / (z + w) * beta(z, w)));
      }
    }
    battery.record("beta symmetry and recurrence", worst, 1e-13);
  }

  // Closed-form determinants vs the determinant of the closed-form system.
  battery.record("C_alpha determinant closed form",
                 rel(system_matrix(ca).determinant(), ca.det), 1e-12);
  battery.record("E_beta determinant closed form", rel(system_matrix(eb).determinant(), eb.det),
                 1e-12);

  // Closed-form vertex values against the printed rational expressions.
  {
    const double b = beta_;
    const double tau11 = (7 * b * b + 18 * b + 12) / (3 * b * b + 9 * b + 6);
    const double tau12 = (b * b + 6 * b + 6) / (3 * b * b + 9 * b + 6);
    battery.record("E_beta tau vertex values",
                   std::max(rel(eb.r, tau11), rel(eb.m, tau12)), 1e-13);
    const double rho11 = (eb.sigma - 2.0) / (eb.nu * eb.L);
    battery.record("E_beta rho vertex value", rel(ebasis.enriched_dual[0].vertex[0], rho11), 1e-13);
  }

  double af3 = 0.0, sys_a = 0.0, sys_b = 0.0;
  double psi = 0.0, zeta = 0.0, tau = 0.0, rho = 0.0;
  double repro_a = 0.0, repro_b = 0.0, match_a = 0.0, match_b = 0.0;
  double min_det_a = INFINITY, min_det_b = INFINITY;

  const Interpolator op_a(Scheme::c_alpha(alpha));
  const Interpolator op_b(Scheme::e_beta(beta_));
  const Scheme sa = Scheme::c_alpha(alpha);
  const Scheme sb = Scheme::e_beta(beta_);

  for (int t = 0; t < options.triangles; ++t) {
    const Triangle2D tri = random_triangle(rng);
    auto I = [&](int j, const ScalarField& f) { return dof_cr(tri, j, f, unit); };
    auto F = [&](int j, const ScalarField& f) { return dof_f_enr(tri, j, alpha, f, wa); };
    auto G = [&](int j, const ScalarField& f) { return dof_g_enr(tri, j, beta_, f, wb); };
    auto L = [&](int j, const ScalarField& f) { return dof_vertex(tri, j, f); };

    // AF3: phi dual to vertex values, varphi dual to edge means.
    for (int i = 1; i <= 3; ++i) {
      const ScalarField phi = [&tri, i](Point2D p) { return af3_phi(tri, i, p); };
      const ScalarField bub = [&tri, i](Point2D p) { return af3_bubble(tri, i, p); };
      for (int j = 1; j <= 3; ++j) {
        const double d = i == j ? 1.0 : 0.0;
        af3 = std::max({af3, std::abs(L(j, phi) - d), std::abs(I(j, phi)),
                        std::abs(L(j, bub)), std::abs(I(j, bub) - d)});
      }
    }

    // Vertex-value systems.
    const Eigen::Matrix3d na = numeric_system_matrix(tri, {Family::CAlpha, alpha});
    const Eigen::Matrix3d nb = numeric_system_matrix(tri, {Family::EBeta, beta_});
    sys_a = std::max(sys_a, (na - system_matrix(ca)).cwiseAbs().maxCoeff() / std::abs(ca.gamma));
    sys_b = std::max(sys_b, (nb - system_matrix(eb)).cwiseAbs().maxCoeff() / std::abs(eb.nu));

    // Duality of both enriched bases.
    psi = std::max({psi, duality_residual(tri, cb.edge_dual, I, true),
                    duality_residual(tri, cb.edge_dual, F, false)});
    zeta = std::max({zeta, duality_residual(tri, cb.enriched_dual, I, false),
                     duality_residual(tri, cb.enriched_dual, F, true)});
    tau = std::max({tau, duality_residual(tri, ebasis.edge_dual, I, true),
                    duality_residual(tri, ebasis.edge_dual, G, false)});
    rho = std::max({rho, duality_residual(tri, ebasis.enriched_dual, I, false),
                    duality_residual(tri, ebasis.enriched_dual, G, true)});

    // Operators reproduce quadratics and match the DoFs of a smooth function.
    const QuadOnTri q = random_quadratic(rng);
    const ScalarField qf = q.on(tri);
    const auto pa = op_a.interpolate(tri, qf);
    const auto pb = op_b.interpolate(tri, qf);
    for (int s = 0; s < 10; ++s) {
      std::uniform_real_distribution<double> u(0.0, 1.0);
      double l2 = u(rng), l3 = u(rng);
      if (l2 + l3 > 1.0) {
        l2 = 1.0 - l2;
        l3 = 1.0 - l3;
      }
      const Barycentric b{1.0 - l2 - l3, l2, l3};
      repro_a = std::max(repro_a, std::abs(pa.value(b) - q(b)));
      repro_b = std::max(repro_b, std::abs(pb.value(b) - q(b)));
    }
    const ScalarField smooth = [](Point2D p) { return std::exp(0.3 * p.x - 0.2 * p.y) * std::cos(p.x); };
    match_a = std::max(match_a, dof_consistency(op_a.interpolate(tri, smooth), tri, sa, smooth));
    match_b = std::max(match_b, dof_consistency(op_b.interpolate(tri, smooth), tri, sb, smooth));

    min_det_a = std::min(min_det_a, std::abs(unisolvence_matrix(tri, {Family::CAlpha, alpha}).determinant()));
    min_det_b = std::min(min_det_b, std::abs(unisolvence_matrix(tri, {Family::EBeta, beta_}).determinant()));
  }

  battery.record("AF3 duality", af3, 1e-12);
  battery.record("C_alpha vertex-value system", sys_a, 1e-12);
  battery.record("E_beta vertex-value system", sys_b, 1e-12);
  battery.record("C_alpha psi duality", psi, 1e-10);
  battery.record("C_alpha zeta duality", zeta, 1e-10);
  battery.record("E_beta tau duality", tau, 1e-10);
  battery.record("E_beta rho duality", rho, 1e-10);
  battery.record("C_alpha P2 reproduction", repro_a, 1e-10);
  battery.record("E_beta P2 reproduction", repro_b, 1e-10);
  battery.record("C_alpha DoF matching", match_a, 1e-11);
  battery.record("E_beta DoF matching", match_b, 1e-11);
  // Residual reported as 1/|det| so that "small is good" holds throughout.
  battery.record("C_alpha unisolvence", 1.0 / min_det_a, 1e10);
  battery.record("E_beta unisolvence", 1.0 / min_det_b, 1e10);
  return battery.finish();
}

}  // namespace crenrich
