#include "crenrich/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "crenrich/errors.hpp"
#include "crenrich/experiments.hpp"
#include "crenrich/mesh.hpp"
#include "crenrich/operators.hpp"
#include "crenrich/verification.hpp"

namespace crenrich::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int parse_int(const std::string& s, const char* what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
    throw ArgumentError(std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

struct CommonOptions {
  std::string schemes = "cr,c-alpha:1,e-beta:1";
  std::string functions = "f1..f6";
  int quad_order = kDefaultDofNodes;
  int subdiv = 2;
  int rule_degree = TriangleRuleConfig{}.base_degree;
  std::string format = "md";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--schemes,--scheme", o.schemes,
                  "Comma list of cr, c-alpha[:a], e-beta[:b] (parameter default 1)")
      ->capture_default_str();
  cmd->add_option("--functions,--function", o.functions, "Test functions, e.g. f1..f6 or f1,f5")
      ->capture_default_str();
  cmd->add_option("--quad-order", o.quad_order, "Gauss nodes per DoF functional")
      ->capture_default_str();
  cmd->add_option("--subdiv", o.subdiv, "Uniform subdivision level of the error rule")
      ->capture_default_str();
  cmd->add_option("--rule-degree", o.rule_degree,
                  "Polynomial exactness of the base rule on each sub-triangle (>= 5)")
      ->capture_default_str();
  cmd->add_option("--format", o.format, "csv or md")->capture_default_str();
  cmd->add_option("--out", o.out_path, "Write the table here instead of stdout");
}

std::vector<Scheme> parse_schemes(const CommonOptions& o) {
  std::vector<Scheme> schemes;
  for (const auto& s : split(o.schemes, ',')) schemes.push_back(Scheme::parse(s, o.quad_order));
  if (schemes.empty()) throw ArgumentError("no schemes given");
  return schemes;
}

std::vector<TestFunction> parse_functions(const CommonOptions& o) {
  std::vector<TestFunction> out;
  for (const auto& name : expand_function_list(o.functions)) out.push_back(renka(name));
  if (out.empty()) throw ArgumentError("no test functions given");
  return out;
}

TriangleRuleConfig rule_config(const CommonOptions& o) {
  TriangleRuleConfig cfg;
  cfg.subdivision_level = o.subdiv;
  cfg.base_degree = o.rule_degree;
  (void)TriangleRule(cfg);  // validates
  return cfg;
}

void check_finite(const ErrorReport& report) {
  for (const auto& r : report.rows) {
    if (!std::isfinite(r.l1_error)) {
      throw std::runtime_error("non-finite L1 error for " + r.function + " with " +
                               r.scheme.label() + " on " + r.mesh);
    }
  }
}

void emit(const ErrorReport& report, const CommonOptions& o, std::ostream& out) {
  const std::string text = table_emit(report, parse_table_format(o.format));
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw ArgumentError("cannot open output file '" + o.out_path + "'");
  file << text;
}

}  // namespace

std::vector<std::string> expand_function_list(const std::string& text) {
  std::vector<std::string> names;
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      names.push_back(renka(item).name);
      continue;
    }
    const int lo = renka(item.substr(0, dots)).id;
    const int hi = renka(item.substr(dots + 2)).id;
    if (hi < lo) throw ArgumentError("empty function range '" + item + "'");
    for (int id = lo; id <= hi; ++id) names.push_back(renka(id).name);
  }
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crouzeix-Raviart element and its quadratic enrichments: L1 error experiments"};
  app.require_subcommand(1);

  CommonOptions table_opts;
  int grid = 19;
  std::vector<std::string> mesh_files;
  auto* table = app.add_subcommand("table", "L1 errors of several schemes on one mesh");
  auto* grid_opt = table->add_option("--grid", grid, "Uniform n x n grid on the unit square")
                       ->capture_default_str();
  auto* mesh_opt = table->add_option("--mesh", mesh_files, "Triangle-format NODE and ELE files")
                       ->expected(2);
  grid_opt->excludes(mesh_opt);
  std::string diagonal = "anti";
  table->add_option("--grid-diagonal", diagonal, "Cell diagonal of the grid: anti or main")
      ->check(CLI::IsMember({"anti", "main"}))
      ->capture_default_str();
  add_common(table, table_opts);

  CommonOptions conv_opts;
  conv_opts.schemes = "cr";
  conv_opts.functions = "f5";
  std::string grids;
  auto* converge = app.add_subcommand("converge", "Observed orders on refined uniform grids");
  converge->add_option("--grids", grids, "Strictly increasing grid sizes, e.g. 19,99")->required();
  add_common(converge, conv_opts);

  VerifyOptions verify_opts;
  std::string fault;
  auto* verify = app.add_subcommand("verify", "Numeric checks of both element families");
  verify->add_option("--alpha", verify_opts.alpha, "C_alpha parameter")->capture_default_str();
  verify->add_option("--beta", verify_opts.beta, "E_beta parameter")->capture_default_str();
  verify->add_option("--triangles", verify_opts.triangles, "Random triangles per check")
      ->capture_default_str();
  verify->add_option("--inject-fault", fault, "Test hook: sigma-beta")->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  // Configuration is fully validated before any mesh is read or any error
  // computed; the stages below map exceptions onto exit codes.
  enum class Stage { Config, Mesh, Compute } stage = Stage::Config;
  try {
    if (*table) {
      const auto schemes = parse_schemes(table_opts);
      const auto functions = parse_functions(table_opts);
      const auto cfg = rule_config(table_opts);
      (void)parse_table_format(table_opts.format);
      if (grid < 1) throw ArgumentError("--grid must be >= 1");

      stage = Stage::Mesh;
      std::optional<TriMesh> mesh;
      std::string label;
      if (!mesh_files.empty()) {
        mesh.emplace(load_triangle_mesh_files(mesh_files[0], mesh_files[1]));
        label = std::filesystem::path(mesh_files[0]).stem().string();
      } else {
        mesh.emplace(uniform_grid_mesh(
            grid, diagonal == "main" ? GridDiagonal::Main : GridDiagonal::Anti));
        label = "grid-" + std::to_string(grid);
      }

      stage = Stage::Compute;
      const auto report = error_table(*mesh, label, schemes, functions, cfg);
      check_finite(report);
      emit(report, table_opts, out);
      return kOk;
    }

    if (*converge) {
      std::vector<int> sizes;
      for (const auto& s : split(grids, ',')) sizes.push_back(parse_int(s, "grid size"));
      if (sizes.size() < 2) throw ArgumentError("--grids needs at least two sizes");
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1 || (i > 0 && sizes[i] <= sizes[i - 1])) {
          throw ArgumentError("--grids must be positive and strictly increasing");
        }
      }
      const auto schemes = parse_schemes(conv_opts);
      const auto functions = parse_functions(conv_opts);
      const auto cfg = rule_config(conv_opts);
      (void)parse_table_format(conv_opts.format);

      stage = Stage::Compute;
      ErrorReport all;
      for (const auto& tf : functions) {
        for (const auto& scheme : schemes) {
          auto part = convergence_study(sizes, scheme, tf, cfg);
          all.rows.insert(all.rows.end(), part.rows.begin(), part.rows.end());
        }
      }
      check_finite(all);
      emit(all, conv_opts, out);
      return kOk;
    }

    if (*verify) {
      if (fault == "sigma-beta") {
        verify_opts.fault = InjectedFault::WrongSigmaBeta;
      } else if (!fault.empty()) {
        throw ArgumentError("unknown fault '" + fault + "'");
      }
      validate({Family::CAlpha, verify_opts.alpha});
      validate({Family::EBeta, verify_opts.beta});
      if (verify_opts.triangles < 1) throw ArgumentError("--triangles must be >= 1");

      stage = Stage::Compute;
      const auto summary = run_verification(verify_opts);
      std::size_t passed = 0;
      for (const auto& c : summary.checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (residual "
            << format_sci(c.residual) << ", tolerance " << format_sci(c.tolerance) << ")\n";
        if (c.passed) ++passed;
      }
      out << passed << "/" << summary.checks.size() << " checks passed (alpha = "
          << verify_opts.alpha << ", beta = " << verify_opts.beta << ")\n";
      if (!summary.all_passed()) {
        for (const auto& c : summary.checks) {
          if (!c.passed) err << "verification failed: " << c.name << '\n';
        }
        return kNumericFailure;
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const GeometryError& e) {
    err << (stage == Stage::Mesh ? "parse error: " : "geometry error: ") << e.what() << '\n';
    return stage == Stage::Mesh ? kParseError : kNumericFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return stage == Stage::Mesh ? kParseError : kConfigError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return stage == Stage::Compute ? kNumericFailure : kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return stage == Stage::Config ? kConfigError : kNumericFailure;
  }
  return kConfigError;
}

}  // namespace crenrich::cli
