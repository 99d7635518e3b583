#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <Eigen/Dense>

#include "crenrich/elements.hpp"
#include "crenrich/errors.hpp"
#include "crenrich/experiments.hpp"
#include "crenrich/mesh.hpp"
#include "crenrich/operators.hpp"
#include "crenrich/quadrature.hpp"
#include "crenrich/verification.hpp"

namespace py = pybind11;
using namespace crenrich;

namespace {

using XY = std::pair<double, double>;

Point2D to_point(const XY& p) { return {p.first, p.second}; }

// Python callables take (x, y); the GIL is held throughout because the core
// library runs single-threaded.
ScalarField to_field(py::function f) {
  return [f = std::move(f)](Point2D p) { return f(p.x, p.y).cast<double>(); };
}

Triangle2D to_triangle(const std::array<XY, 3>& v) {
  return Triangle2D(to_point(v[0]), to_point(v[1]), to_point(v[2]));
}

py::list matrix_rows(const Eigen::MatrixXd& m) {
  py::list rows;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    py::list row;
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.append(m(i, j));
    rows.append(row);
  }
  return rows;
}

TriangleRuleConfig rule_config(int rule_degree, int subdiv) {
  return TriangleRuleConfig{rule_degree, subdiv};
}

}  // namespace

PYBIND11_MODULE(_crenrich, m) {
  m.doc() = "Crouzeix-Raviart interpolation and its quadratic enrichments";

  auto geometry_error = py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SingularFamilyError>(m, "SingularFamilyError", domain_error.ptr());
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<MisuseError>(m, "MisuseError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  (void)geometry_error;

  const TriangleRuleConfig defaults{};

  // Meshes ------------------------------------------------------------------
  py::class_<TriMesh>(m, "TriMesh")
      .def("__len__", &TriMesh::size)
      .def_property_readonly("vertices",
                             [](const TriMesh& mesh) {
                               std::vector<XY> out;
                               for (const auto& p : mesh.vertices()) out.emplace_back(p.x, p.y);
                               return out;
                             })
      .def_property_readonly("triangles", &TriMesh::connectivity,
                             "Zero-based vertex indices of each triangle.")
      .def("total_area", &TriMesh::total_area)
      .def("max_diameter", &TriMesh::max_diameter)
      .def(
          "locate", [](const TriMesh& mesh, double x, double y) { return mesh.locate({x, y}); },
          py::arg("x"), py::arg("y"))
      .def("node_text", [](const TriMesh& mesh) { return to_node_text(mesh); })
      .def("ele_text", [](const TriMesh& mesh) { return to_ele_text(mesh); });

  m.def(
      "uniform_grid_mesh",
      [](int n, const std::string& diagonal) {
        if (diagonal != "anti" && diagonal != "main") {
          throw ArgumentError("diagonal must be 'anti' or 'main', got '" + diagonal + "'");
        }
        return uniform_grid_mesh(n, diagonal == "anti" ? GridDiagonal::Anti : GridDiagonal::Main);
      },
      py::arg("n"), py::arg("diagonal") = "anti");
  m.def(
      "load_triangle_mesh",
      [](const std::string& node_text, const std::string& ele_text) {
        return load_triangle_mesh(node_text, ele_text);
      },
      py::arg("node_text"), py::arg("ele_text"));
  m.def(
      "load_triangle_mesh_files",
      [](const std::string& node, const std::string& ele) { return load_triangle_mesh_files(node, ele); },
      py::arg("node_path"), py::arg("ele_path"));

  // Special functions and 1D rules --------------------------------------------
  m.def("ln_gamma", &ln_gamma, py::arg("x"));
  m.def("beta", &beta, py::arg("a"), py::arg("b"));
  m.def(
      "gauss_legendre",
      [](int n) {
        const auto r = gauss_legendre(n);
        return std::make_pair(r.nodes, r.weights);
      },
      py::arg("n"), "Nodes and weights on [0, 1].");
  m.def(
      "gauss_jacobi",
      [](int n, double alpha) {
        const auto r = gauss_jacobi(n, alpha);
        return std::make_pair(r.nodes, r.weights);
      },
      py::arg("n"), py::arg("alpha"), "Nodes and weights for t^alpha (1-t)^alpha on [0, 1].");

  // Element constants ---------------------------------------------------------
  m.def(
      "coeffs_c_alpha",
      [](double alpha) {
        const auto c = coeffs_c_alpha(alpha);
        py::dict d;
        d["alpha"] = c.alpha;
        d["gamma"] = c.gamma;
        d["h"] = c.h;
        d["K"] = c.K;
        d["c"] = c.c;
        d["d"] = c.d;
        d["L"] = c.L;
        d["det"] = c.det;
        d["system"] = matrix_rows(system_matrix(c));
        return d;
      },
      py::arg("alpha"));
  m.def(
      "coeffs_e_beta",
      [](double b) {
        const auto c = coeffs_e_beta(b);
        py::dict d;
        d["beta"] = c.beta;
        d["nu"] = c.nu;
        d["sigma"] = c.sigma;
        d["r"] = c.r;
        d["m"] = c.m;
        d["L"] = c.L;
        d["det"] = c.det;
        d["system"] = matrix_rows(system_matrix(c));
        return d;
      },
      py::arg("beta"));
  m.def(
      "unisolvence_matrix",
      [](const std::array<XY, 3>& tri, const std::string& family, double value) {
        if (family != "c-alpha" && family != "e-beta") {
          throw ArgumentError("family must be 'c-alpha' or 'e-beta', got '" + family + "'");
        }
        const FamilyParameter p{family == "c-alpha" ? Family::CAlpha : Family::EBeta, value};
        return matrix_rows(unisolvence_matrix(to_triangle(tri), p));
      },
      py::arg("triangle"), py::arg("family"), py::arg("value"));

  // Schemes and interpolation ---------------------------------------------------
  py::class_<Scheme>(m, "Scheme")
      .def_static("cr", &Scheme::cr, py::arg("dof_nodes") = kDefaultDofNodes)
      .def_static("c_alpha", &Scheme::c_alpha, py::arg("alpha"), py::arg("dof_nodes") = kDefaultDofNodes)
      .def_static("e_beta", &Scheme::e_beta, py::arg("beta"), py::arg("dof_nodes") = kDefaultDofNodes)
      .def_static("parse", &Scheme::parse, py::arg("text"), py::arg("dof_nodes") = kDefaultDofNodes)
      .def_property_readonly("label", &Scheme::label)
      .def_property_readonly("family", &Scheme::family_name)
      .def_property_readonly("parameter", &Scheme::parameter)
      .def_property_readonly("dof_nodes", &Scheme::dof_nodes)
      .def_property_readonly("enriched", &Scheme::enriched)
      .def("__eq__", [](const Scheme& a, const Scheme& b) { return a == b; })
      .def("__repr__", [](const Scheme& s) { return "Scheme('" + s.label() + "')"; });

  py::class_<LocalInterpolant>(m, "LocalInterpolant")
      .def_readonly("coeffs", &LocalInterpolant::coeffs)
      .def_readonly("scheme", &LocalInterpolant::scheme);

  m.def(
      "interpolate_local",
      [](const std::array<XY, 3>& tri, const Scheme& scheme, py::function f) {
        return interpolate_local(to_triangle(tri), scheme, to_field(std::move(f)));
      },
      py::arg("triangle"), py::arg("scheme"), py::arg("f"));
  m.def(
      "evaluate_local",
      [](const LocalInterpolant& interp, const std::array<XY, 3>& tri, double x, double y) {
        return evaluate_local(interp, to_triangle(tri), {x, y});
      },
      py::arg("interpolant"), py::arg("triangle"), py::arg("x"), py::arg("y"));
  m.def(
      "dofs",
      [](const std::array<XY, 3>& tri, const Scheme& scheme, py::function f) {
        return Interpolator(scheme).dofs(to_triangle(tri), to_field(std::move(f)));
      },
      py::arg("triangle"), py::arg("scheme"), py::arg("f"));

  py::class_<GlobalApproximant>(m, "GlobalApproximant")
      .def("__len__", &GlobalApproximant::size)
      .def_property_readonly("scheme", &GlobalApproximant::scheme)
      .def(
          "__call__", [](const GlobalApproximant& g, double x, double y) { return g.evaluate({x, y}); },
          py::arg("x"), py::arg("y"), "Value at (x, y), or None outside the mesh.");
  m.def(
      "interpolate_global",
      [](const TriMesh& mesh, const Scheme& scheme, py::function f) {
        return interpolate_global(mesh, scheme, to_field(std::move(f)));
      },
      py::arg("mesh"), py::arg("scheme"), py::arg("f"), py::keep_alive<0, 1>());

  // Experiments -----------------------------------------------------------------
  m.def(
      "test_function",
      [](const std::string& name, double x, double y) { return renka(name)(Point2D{x, y}); },
      py::arg("name"), py::arg("x"), py::arg("y"), "Evaluate test function 'f1'..'f6' at (x, y).");

  m.def(
      "l1_error",
      [](const TriMesh& mesh, const Scheme& scheme, py::object f, int rule_degree, int subdiv) {
        const auto cfg = rule_config(rule_degree, subdiv);
        if (py::isinstance<py::str>(f)) return l1_error(mesh, scheme, renka(f.cast<std::string>()), cfg);
        return l1_error(mesh, scheme, to_field(f.cast<py::function>()), cfg);
      },
      py::arg("mesh"), py::arg("scheme"), py::arg("f"), py::arg("rule_degree") = defaults.base_degree,
      py::arg("subdiv") = defaults.subdivision_level,
      "L1 norm of f - Pi f. f is a test function name ('f1'..'f6') or a callable f(x, y).");

  py::class_<ErrorRow>(m, "ErrorRow")
      .def_readonly("mesh", &ErrorRow::mesh)
      .def_readonly("triangles", &ErrorRow::triangles)
      .def_readonly("h", &ErrorRow::h)
      .def_readonly("scheme", &ErrorRow::scheme)
      .def_readonly("function", &ErrorRow::function)
      .def_readonly("l1_error", &ErrorRow::l1_error)
      .def_readonly("order", &ErrorRow::order);

  py::class_<ErrorReport>(m, "ErrorReport")
      .def_readonly("rows", &ErrorReport::rows)
      .def(
          "emit",
          [](const ErrorReport& r, const std::string& format) {
            return table_emit(r, parse_table_format(format));
          },
          py::arg("format") = "md");

  m.def(
      "error_table",
      [](const TriMesh& mesh, const std::string& label, const std::vector<std::string>& schemes,
         const std::vector<std::string>& functions, int rule_degree, int subdiv) {
        std::vector<Scheme> s;
        for (const auto& text : schemes) s.push_back(Scheme::parse(text));
        std::vector<TestFunction> fs;
        for (const auto& name : functions) fs.push_back(renka(name));
        return error_table(mesh, label, s, fs, rule_config(rule_degree, subdiv));
      },
      py::arg("mesh"), py::arg("label"), py::arg("schemes") = std::vector<std::string>{"cr", "c-alpha:1", "e-beta:1"},
      py::arg("functions") = std::vector<std::string>{"f1", "f2", "f3", "f4", "f5", "f6"},
      py::arg("rule_degree") = defaults.base_degree, py::arg("subdiv") = defaults.subdivision_level);

  m.def(
      "convergence_study",
      [](const std::vector<int>& grids, const Scheme& scheme, const std::string& function, int rule_degree,
         int subdiv) {
        return convergence_study(grids, scheme, renka(function), rule_config(rule_degree, subdiv));
      },
      py::arg("grids"), py::arg("scheme"), py::arg("function"), py::arg("rule_degree") = defaults.base_degree,
      py::arg("subdiv") = defaults.subdivision_level);

  m.def("observed_order", &observed_order, py::arg("e_coarse"), py::arg("h_coarse"), py::arg("e_fine"),
        py::arg("h_fine"));
  m.def("format_sci", &format_sci, py::arg("value"));

  // Verification ------------------------------------------------------------------
  m.def(
      "verify",
      [](double alpha, double b, int triangles, unsigned long long seed) {
        VerifyOptions opt;
        opt.alpha = alpha;
        opt.beta = b;
        opt.triangles = triangles;
        opt.seed = seed;
        const auto summary = run_verification(opt);
        py::list out;
        for (const auto& c : summary.checks) {
          py::dict d;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["residual"] = c.residual;
          d["tolerance"] = c.tolerance;
          out.append(d);
        }
        return out;
      },
      py::arg("alpha") = 1.0, py::arg("beta") = 1.0, py::arg("triangles") = 20,
      py::arg("seed") = VerifyOptions{}.seed,
      "Run the numeric self-check battery; one dict per check.");
}
