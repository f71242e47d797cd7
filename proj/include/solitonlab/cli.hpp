#pragma once

// Command-line driver. Exit codes: 0 success (an empty soliton set is a
// successful answer), 1 verification failure, 2 invalid input or usage.

#include "solitonlab/classification.hpp"
#include "solitonlab/geometry.hpp"
#include "solitonlab/json_io.hpp"
#include "solitonlab/lie_structure.hpp"
#include "solitonlab/soliton.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace solitonlab::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kBadInput = 2 };

struct Options {
  std::string family;
  std::string brackets;
  std::vector<std::string> params;
  std::optional<int> eta;
  std::string v;
  std::string lambda;
  std::string grid;
  std::string format = "table";
  std::string t1 = "g";
  std::string t2 = "g";
  bool full_tensor = false;
  bool all = false;
  bool corrected = false;
};

/// Group or raw bracket table selected on the command line.
struct Target {
  std::optional<GroupSpec> spec;
  StructureConstants sc;

  Json describe() const { return spec ? to_json(*spec) : Json{{"brackets", to_json(sc)}}; }
};

inline std::vector<Rat> parse_rat_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rat_parse(item));
  if (out.size() != expected) {
    throw InputError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated rationals");
  }
  return out;
}

inline Vec3 parse_vec3(const std::string& text) {
  const auto r = parse_rat_list(text, 3, "--v");
  return Vec3{{r[0], r[1], r[2]}};
}

inline std::map<std::string, Rat> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, Rat> out;
  for (const auto& p : raw) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects name=value, got '" + p + "'");
    const std::string key = p.substr(0, eq);
    if (out.count(key)) throw InputError("parameter '" + key + "' given twice");
    out[key] = rat_parse(p.substr(eq + 1));
  }
  return out;
}

/// Resolves --family/--param/--eta or --brackets. Custom tables must satisfy
/// Jacobi unless `allow_non_lie`.
inline Target resolve_target(const Options& o, bool allow_non_lie = false) {
  if (!o.family.empty() && !o.brackets.empty()) throw InputError("use either --family or --brackets, not both");
  if (!o.brackets.empty()) {
    if (!o.params.empty() || o.eta) throw InputError("--param/--eta only apply with --family");
    Target t{std::nullopt, brackets_from_json(read_json_file(o.brackets))};
    if (!allow_non_lie && !jacobi_defect(t.sc).is_zero()) {
      throw InputError("bracket table violates the Jacobi identity");
    }
    return t;
  }
  if (o.family.empty()) throw InputError("one of --family or --brackets is required");
  const auto g = make_group(parse_family(o.family), parse_params(o.params), o.eta);
  return {g.spec, g.sc};
}

/// Human-readable rendering of any JSON document, one fact per line.
inline void render_table(const Json& j, std::ostream& out, const std::string& indent = "") {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v) {
      if (x.is_object()) return false;
      if (x.is_array()) {
        for (const auto& y : x) {
          if (y.is_structured()) return false;
        }
      }
    }
    return true;
  };
  auto inline_array = [&](const Json& v) {
    std::function<std::string(const Json&)> go = [&](const Json& x) -> std::string {
      if (!x.is_array()) return scalar(x);
      std::string s = "[";
      for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + go(x[i]);
      return s + "]";
    };
    return go(v);
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !flat(value))) {
        out << indent << key << ":\n";
        render_table(value, out, indent + "  ");
      } else if (value.is_array()) {
        out << indent << key << ": " << inline_array(value) << "\n";
      } else {
        out << indent << key << ": " << scalar(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_structured() && !flat(j[i])) {
        out << indent << "- [" << i << "]\n";
        render_table(j[i], out, indent + "  ");
      } else {
        out << indent << "- " << (j[i].is_array() ? inline_array(j[i]) : scalar(j[i])) << "\n";
      }
    }
  } else {
    out << indent << scalar(j) << "\n";
  }
}

inline void emit(const Options& o, const Json& j, std::ostream& out) {
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    render_table(j, out);
  }
}

inline SymBilinear parse_form(const std::string& text, const Target& t, const Options& o) {
  const Metric g = Metric::lorentzian();
  if (text == "g") return g.form();
  if (text == "lvg") {
    if (o.v.empty()) throw InputError("form 'lvg' needs --v");
    return lie_derivative_metric(t.sc, g, parse_vec3(o.v));
  }
  const auto r = parse_rat_list(text, 6, "symmetric form (t11,t12,t13,t22,t23,t33)");
  return SymBilinear::from_upper({r[0], r[1], r[2], r[3], r[4], r[5]});
}

inline int cmd_check_jacobi(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o, true);
  const Vec3 defect = jacobi_defect(t.sc);
  Json j{{"spec", t.describe()}, {"brackets", to_json(t.sc)}, {"jacobi_defect", to_json(defect)},
         {"ok", defect.is_zero()}};
  emit(o, j, out);
  return defect.is_zero() ? kOk : kMismatch;
}

inline int cmd_curvature(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o);
  Json j = curvature_json(curvature(t.sc, Metric::lorentzian()), o.full_tensor);
  j["spec"] = t.describe();
  if (t.spec && (t.spec->family == Family::G3 || t.spec->family == Family::G4)) {
    const auto dc = derived_constants(*t.spec);
    for (std::size_t k = 0; k < 3; ++k) j["derived"][std::string(1, dc.symbol) + std::to_string(k + 1)] = dc.values[k].str();
  }
  emit(o, j, out);
  return kOk;
}

inline int cmd_lie_derivative(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o);
  if (o.v.empty()) throw InputError("lie-derivative needs --v a,b,c");
  const Vec3 v = parse_vec3(o.v);
  const Metric g = Metric::lorentzian();
  const SymBilinear bracket_form = lie_derivative_metric(t.sc, g, v);
  const SymBilinear conn_form = lie_derivative_metric_via_connection(levi_civita(t.sc, g), g, v);
  Json j{{"spec", t.describe()},
         {"v", to_json(v)},
         {"lie_derivative", to_json(bracket_form)},
         {"routes_agree", bracket_form == conn_form}};
  emit(o, j, out);
  return bracket_form == conn_form ? kOk : kMismatch;
}

inline int cmd_kn_product(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o);
  const SymBilinear t1 = parse_form(o.t1, t, o);
  const SymBilinear t2 = parse_form(o.t2, t, o);
  const Tensor4 kn = kulkarni_nomizu(t1, t2);
  Json j{{"spec", t.describe()},
         {"t1", to_json(t1)},
         {"t2", to_json(t2)},
         {"full", o.full_tensor},
         {"components", tensor_components_json(kn, o.full_tensor)}};
  emit(o, j, out);
  return kOk;
}

inline int cmd_residual(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o);
  if (o.v.empty() || o.lambda.empty()) throw InputError("residual needs --v a,b,c and --lambda r");
  const Vec3 v = parse_vec3(o.v);
  const Rat lambda = rat_parse(o.lambda);
  const Tensor4 res = soliton_residual(t.sc, v, lambda);
  Json j{{"spec", t.describe()},
         {"v", to_json(v)},
         {"lambda", lambda.str()},
         {"zero", res.is_zero()},
         {"full", o.full_tensor},
         {"components", tensor_components_json(res, o.full_tensor)}};
  emit(o, j, out);
  return kOk;
}

inline int cmd_solve(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o);
  SolitonVerdict verdict = solve_soliton(t.sc);
  verdict.spec = t.spec;
  emit(o, verdict_json(verdict, t.sc), out);
  return kOk;
}

inline int cmd_grid(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw InputError("grid needs --family");
  Json j = Json::array();
  for (const auto& s : default_grid(parse_family(o.family))) j.push_back(to_json(s));
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& s : j) out << s.dump() << "\n";
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.all == !o.family.empty()) throw InputError("verify needs exactly one of --family or --all");
  const Statement statement = o.corrected ? Statement::corrected : Statement::printed;
  std::vector<Family> families;
  if (o.all) {
    families.assign(kAllFamilies.begin(), kAllFamilies.end());
  } else {
    families.push_back(parse_family(o.family));
  }
  std::map<Family, std::vector<GroupSpec>> grids;
  if (!o.grid.empty()) {
    for (const auto& s : grid_from_json(read_json_file(o.grid))) {
      if (std::find(families.begin(), families.end(), s.family) == families.end()) {
        throw InputError("grid point of " + family_name(s.family) + " does not match --family");
      }
      grids[s.family].push_back(s);
    }
  } else {
    for (auto f : families) grids[f] = default_grid(f);
  }

  Json reports = Json::array();
  std::vector<VerificationReport> raw;
  bool pass = true;
  for (auto f : families) {
    raw.push_back(verify_family(f, grids[f], statement));
    err << family_name(f) << ": verified in " << raw.back().elapsed.count() << " s\n";
    pass = pass && raw.back().pass();
    reports.push_back(report_json(raw.back()));
  }
  Json j{{"statement", o.corrected ? "corrected" : "printed"}, {"families", reports}, {"pass", pass}};
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "statement: " << j["statement"].get<std::string>() << "\n";
    for (const auto& r : raw) {
      out << family_name(r.family) << ": " << r.mismatches.size() << " mismatches / " << r.points_checked
          << " points (unique " << r.unique << ", family " << r.families << ", empty " << r.empty << ")\n";
    }
    for (const auto& r : reports) {
      for (const auto& m : r["mismatches"]) {
        out << "mismatch " << r["family"].get<std::string>() << " #" << m["grid_index"].get<std::size_t>()
            << " " << m["spec"].dump() << "\n";
        render_table(Json{{"expected", m["expected"]}, {"got", m["got"]}}, out, "  ");
      }
    }
    out << "pass: " << (pass ? "true" : "false") << "\n";
  }
  return pass ? kOk : kMismatch;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact left-invariant Riemann soliton engine for 3D Lorentzian Lie groups", "soliton_lab"};
  app.require_subcommand(1);
  Options o;

  auto target_opts = [&o](CLI::App* sub) {
    sub->add_option("--family", o.family, "group family g1..g7");
    sub->add_option("--brackets", o.brackets, "JSON bracket table file");
    sub->add_option("--param", o.params, "parameter name=value (repeatable)")->take_all();
    sub->add_option("--eta", o.eta, "eta for G4 (1 or -1)");
  };
  auto format_opt = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };

  auto* jac = app.add_subcommand("check-jacobi", "Jacobi defect of a bracket table");
  auto* curv = app.add_subcommand("curvature", "Curvature components R_ijkl");
  auto* lie = app.add_subcommand("lie-derivative", "Lie derivative of the metric along V");
  auto* kn = app.add_subcommand("kn-product", "Kulkarni-Nomizu product of two symmetric forms");
  auto* res = app.add_subcommand("residual", "Residual of the soliton equation at (V, lambda)");
  auto* solve = app.add_subcommand("solve", "Solve the soliton system exactly");
  auto* verify = app.add_subcommand("verify", "Check the classification over a parameter grid");
  auto* grid = app.add_subcommand("grid", "Print the default verification grid");

  for (auto* sub : {jac, curv, lie, kn, res, solve}) {
    target_opts(sub);
    format_opt(sub);
  }
  curv->add_flag("--full-tensor", o.full_tensor, "dump all 81 components");
  for (auto* sub : {lie, kn, res}) sub->add_option("--v", o.v, "V components a,b,c");
  kn->add_option("--t1", o.t1, "g, lvg or t11,t12,t13,t22,t23,t33");
  kn->add_option("--t2", o.t2, "g, lvg or t11,t12,t13,t22,t23,t33");
  kn->add_flag("--full-tensor", o.full_tensor, "include zero components");
  res->add_option("--lambda", o.lambda, "soliton constant");
  res->add_flag("--full-tensor", o.full_tensor, "include zero components");
  verify->add_option("--family", o.family, "group family g1..g7");
  verify->add_flag("--all", o.all, "verify all seven families");
  verify->add_option("--grid", o.grid, "JSON grid override file");
  verify->add_flag("--corrected", o.corrected, "use the corrected G7 statement");
  format_opt(verify);
  grid->add_option("--family", o.family, "group family g1..g7")->required();
  format_opt(grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kBadInput;
  }

  try {
    if (*jac) return cmd_check_jacobi(o, out);
    if (*curv) return cmd_curvature(o, out);
    if (*lie) return cmd_lie_derivative(o, out);
    if (*kn) return cmd_kn_product(o, out);
    if (*res) return cmd_residual(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*grid) return cmd_grid(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace solitonlab::cli
