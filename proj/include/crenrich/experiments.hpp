#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crenrich/mesh.hpp"
#include "crenrich/operators.hpp"
#include "crenrich/quadrature.hpp"

namespace crenrich {

/// One of Renka's six bivariate test functions on the unit square.
struct TestFunction {
  int id = 1;  // 1..6
  std::string name;
  double (*eval)(double x, double y) = nullptr;

  double operator()(Point2D p) const { return eval(p.x, p.y); }
  ScalarField field() const { return [e = eval](Point2D p) { return e(p.x, p.y); }; }
};

TestFunction renka(int id);
/// Accepts "f1".."f6".
TestFunction renka(const std::string& name);
std::vector<TestFunction> all_renka();

/// Sum over triangles, in index order, of the integral of |f - Pi f|.
double l1_error(const TriMesh& mesh, const Scheme& scheme, const TestFunction& tf,
                const TriangleRuleConfig& cfg = {});
double l1_error(const TriMesh& mesh, const Scheme& scheme, const ScalarField& f,
                const TriangleRuleConfig& cfg = {});

struct ErrorRow {
  std::string mesh;
  std::size_t triangles = 0;
  double h = 0.0;
  Scheme scheme = Scheme::cr();
  std::string function;
  double l1_error = 0.0;
  std::optional<double> order;
};

struct ErrorReport {
  std::vector<ErrorRow> rows;
};

/// Observed order log(e_coarse / e_fine) / log(h_coarse / h_fine).
double observed_order(double e_coarse, double h_coarse, double e_fine, double h_fine);

/// All (scheme x function) L1 errors on one mesh, ordered function-major.
ErrorReport error_table(const TriMesh& mesh, const std::string& mesh_label,
                        const std::vector<Scheme>& schemes,
                        const std::vector<TestFunction>& functions,
                        const TriangleRuleConfig& cfg = {});

/// L1 errors on uniform_grid_mesh(n) for each n, with orders between
/// consecutive grids (h = 1/n). n_list must be strictly increasing with at
/// least two entries.
ErrorReport convergence_study(const std::vector<int>& n_list, const Scheme& scheme,
                              const TestFunction& tf, const TriangleRuleConfig& cfg = {});

struct LabeledMesh {
  std::string label;
  const TriMesh* mesh;
};

/// Same as convergence_study on arbitrary meshes, with h = max diameter.
ErrorReport convergence_study(const std::vector<LabeledMesh>& meshes, const Scheme& scheme,
                              const TestFunction& tf, const TriangleRuleConfig& cfg = {});

enum class TableFormat { Csv, Markdown };

TableFormat parse_table_format(const std::string& text);

/// CSV: one line per row with columns mesh,N,scheme,param,function,l1_error
/// and a trailing order column when any row has one. Markdown without
/// orders: per mesh, one row per function and one column per scheme.
/// Markdown with orders: one line per row. Numbers use %.4e.
std::string table_emit(const ErrorReport& report, TableFormat format);

/// printf("%.4e") of v.
std::string format_sci(double v);

}  // namespace crenrich
