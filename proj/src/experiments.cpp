#include "crenrich/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "crenrich/errors.hpp"

namespace crenrich {

namespace {

constexpr double kPi = std::numbers::pi;

double f1(double x, double y) { return 0.5 * std::sin(2.0 * kPi * x) * std::cos(2.0 * kPi * y); }
double f2(double x, double y) { return 1.0 / (x * x + y * y + 8.0); }
double f3(double x, double y) {
  const double r2 = (x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5);
  return std::exp(-81.0 / 16.0 * r2) / 3.0;
}
double f4(double x, double y) {
  const double r2 = (x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5);
  return std::sqrt(64.0 - 81.0 * r2) / 9.0 - 0.5;
}
double f5(double x, double y) { return std::exp(x + y); }
double f6(double x, double y) { return 1.0 / (x * x + y * y + 25.0); }

}  // namespace

TestFunction renka(int id) {
  static constexpr double (*table[])(double, double) = {f1, f2, f3, f4, f5, f6};
  if (id < 1 || id > 6) throw ArgumentError("test function id must be 1..6, got " + std::to_string(id));
  return {id, "f" + std::to_string(id), table[id - 1]};
}

TestFunction renka(const std::string& name) {
  if (name.size() == 2 && name[0] == 'f' && name[1] >= '1' && name[1] <= '6') {
    return renka(name[1] - '0');
  }
  throw ArgumentError("unknown test function '" + name + "' (expected f1..f6)");
}

std::vector<TestFunction> all_renka() {
  std::vector<TestFunction> out;
  for (int id = 1; id <= 6; ++id) out.push_back(renka(id));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
double l1_error_impl(const TriMesh& mesh, const Scheme& scheme, const F& f, const ScalarField& field,
                     const TriangleRuleConfig& cfg) {
  const Interpolator op(scheme);
  const TriangleRule rule(cfg);
  double total = 0.0;
  for (std::size_t t = 0; t < mesh.size(); ++t) {
    const Triangle2D& tri = mesh.triangle(t);
    const QuadOnTri q = op.interpolate(tri, field, t).as_quadratic();
    total += rule.integrate_bary(tri, [&](Point2D p, const Barycentric& b) {
      return std::abs(f(p) - q(b));
    });
  }
  return total;
}

}  // namespace

double l1_error(const TriMesh& mesh, const Scheme& scheme, const TestFunction& tf,
                const TriangleRuleConfig& cfg) {
  return l1_error_impl(mesh, scheme, tf, tf.field(), cfg);
}

double l1_error(const TriMesh& mesh, const Scheme& scheme, const ScalarField& f,
                const TriangleRuleConfig& cfg) {
  return l1_error_impl(mesh, scheme, f, f, cfg);
}

double observed_order(double e_coarse, double h_coarse, double e_fine, double h_fine) {
  return std::log(e_coarse / e_fine) / std::log(h_coarse / h_fine);
}

ErrorReport error_table(const TriMesh& mesh, const std::string& mesh_label,
                        const std::vector<Scheme>& schemes,
                        const std::vector<TestFunction>& functions,
                        const TriangleRuleConfig& cfg) {
  if (schemes.empty() || functions.empty()) {
    throw ArgumentError("error table needs at least one scheme and one function");
  }
  ErrorReport report;
  const double h = mesh.max_diameter();
  for (const auto& tf : functions) {
    for (const auto& scheme : schemes) {
      report.rows.push_back(
          {mesh_label, mesh.size(), h, scheme, tf.name, l1_error(mesh, scheme, tf, cfg), {}});
    }
  }
  return report;
}

ErrorReport convergence_study(const std::vector<LabeledMesh>& meshes, const Scheme& scheme,
                              const TestFunction& tf, const TriangleRuleConfig& cfg) {
  if (meshes.size() < 2) throw ArgumentError("convergence study needs at least two meshes");
  ErrorReport report;
  for (const auto& [label, mesh] : meshes) {
    ErrorRow row{label, mesh->size(), mesh->max_diameter(), scheme, tf.name,
                 l1_error(*mesh, scheme, tf, cfg), {}};
    if (!report.rows.empty()) {
      const auto& prev = report.rows.back();
      row.order = observed_order(prev.l1_error, prev.h, row.l1_error, row.h);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

ErrorReport convergence_study(const std::vector<int>& n_list, const Scheme& scheme,
                              const TestFunction& tf, const TriangleRuleConfig& cfg) {
  if (n_list.size() < 2) throw ArgumentError("convergence study needs at least two grid sizes");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1 || (i > 0 && n_list[i] <= n_list[i - 1])) {
      throw ArgumentError("grid sizes must be positive and strictly increasing");
    }
  }
  ErrorReport report;
  for (int n : n_list) {
    const TriMesh mesh = uniform_grid_mesh(n);
    ErrorRow row{"grid-" + std::to_string(n), mesh.size(), 1.0 / n, scheme, tf.name,
                 l1_error(mesh, scheme, tf, cfg), {}};
    if (!report.rows.empty()) {
      const auto& prev = report.rows.back();
      row.order = observed_order(prev.l1_error, prev.h, row.l1_error, row.h);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------

TableFormat parse_table_format(const std::string& text) {
  if (text == "csv") return TableFormat::Csv;
  if (text == "md" || text == "markdown") return TableFormat::Markdown;
  throw ArgumentError("unknown format '" + text + "' (expected csv or md)");
}

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

namespace {

std::string format_order(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string format_param(const Scheme& s) {
  if (!s.enriched()) return "";
  std::ostringstream out;
  out << s.parameter();
  return out.str();
}

std::string emit_csv(const ErrorReport& report, bool with_order) {
  std::ostringstream out;
  out << "mesh,N,scheme,param,function,l1_error" << (with_order ? ",order" : "") << '\n';
  for (const auto& r : report.rows) {
    out << r.mesh << ',' << r.triangles << ',' << r.scheme.family_name() << ','
        << format_param(r.scheme) << ',' << r.function << ',' << format_sci(r.l1_error);
    if (with_order) out << ',' << (r.order ? format_order(*r.order) : "");
    out << '\n';
  }
  return out.str();
}

std::string emit_markdown_long(const ErrorReport& report) {
  std::ostringstream out;
  out << "| mesh | N | scheme | function | L1 error | order |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& r : report.rows) {
    out << "| " << r.mesh << " | " << r.triangles << " | " << r.scheme.label() << " | "
        << r.function << " | " << format_sci(r.l1_error) << " | "
        << (r.order ? format_order(*r.order) : "") << " |\n";
  }
  return out.str();
}

template <class T>
void push_unique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

std::string emit_markdown_pivot(const ErrorReport& report) {
  std::vector<std::string> meshes;
  for (const auto& r : report.rows) push_unique(meshes, r.mesh);

  std::ostringstream out;
  bool first = true;
  for (const auto& mesh : meshes) {
    std::vector<std::string> functions, schemes;
    std::map<std::pair<std::string, std::string>, double> cells;
    std::size_t n = 0;
    for (const auto& r : report.rows) {
      if (r.mesh != mesh) continue;
      n = r.triangles;
      push_unique(functions, r.function);
      push_unique(schemes, r.scheme.label());
      cells[{r.function, r.scheme.label()}] = r.l1_error;
    }
    if (!first) out << '\n';
    first = false;
    out << "L1 errors on " << mesh << " (N = " << n << ")\n\n";
    out << "| function |";
    for (const auto& s : schemes) out << ' ' << s << " |";
    out << "\n|---|";
    for (std::size_t k = 0; k < schemes.size(); ++k) out << "---|";
    out << '\n';
    for (const auto& f : functions) {
      out << "| " << f << " |";
      for (const auto& s : schemes) {
        const auto it = cells.find({f, s});
        out << ' ' << (it == cells.end() ? std::string("n/a") : format_sci(it->second)) << " |";
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string table_emit(const ErrorReport& report, TableFormat format) {
  if (report.rows.empty()) throw ArgumentError("cannot emit an empty report");
  const bool with_order =
      std::any_of(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.order.has_value(); });
  if (format == TableFormat::Csv) return emit_csv(report, with_order);
  return with_order ? emit_markdown_long(report) : emit_markdown_pivot(report);
}

}  // namespace crenrich
