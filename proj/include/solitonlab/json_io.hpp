#pragma once

// JSON surfaces: GroupSpec, bracket tables, curvature, verdicts, reports.
// Rationals always travel as `p/q` strings.

#include "solitonlab/classification.hpp"
#include "solitonlab/geometry.hpp"
#include "solitonlab/lie_structure.hpp"
#include "solitonlab/soliton.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace solitonlab {

using Json = nlohmann::json;

inline Json to_json(const Rat& r) { return r.str(); }

inline Json to_json(const VecQ& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

inline Json to_json(const Vec3& v) { return to_json(VecQ(v.c.begin(), v.c.end())); }

inline Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  throw InputError("expected rational string, got " + j.dump());
}

inline Json to_json(const GroupSpec& s) {
  Json out;
  out["family"] = family_name(s.family);
  for (const auto& name : family_parameters(s.family)) {
    if (name == "alpha") out[name] = s.alpha.str();
    if (name == "beta") out[name] = s.beta.str();
    if (name == "gamma") out[name] = s.gamma.str();
    if (name == "delta") out[name] = s.delta.str();
  }
  if (family_uses_eta(s.family)) out["eta"] = s.eta;
  return out;
}

/// Parses and validates `{"family":"G1","alpha":"1","beta":"2"}`.
inline LieGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw InputError("group spec must be an object with a \"family\" string");
  }
  const Family family = parse_family(j["family"].get<std::string>());
  std::map<std::string, Rat> params;
  std::optional<int> eta;
  for (const auto& [key, value] : j.items()) {
    if (key == "family") continue;
    if (key == "eta") {
      const Rat e = rat_from_json(value);
      if (!e.is_integer()) throw InputError("eta must be 1 or -1");
      eta = static_cast<int>(e.numerator());
      continue;
    }
    params[key] = rat_from_json(value);
  }
  return make_group(family, params, eta);
}

inline std::vector<GroupSpec> grid_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("grid file must hold a JSON list of group specs");
  std::vector<GroupSpec> out;
  for (const auto& item : j) out.push_back(group_from_json(item).spec);
  return out;
}

inline Json to_json(const StructureConstants& sc) {
  return Json{{"e1e2", to_json(sc.bracket_of_basis(0, 1))},
              {"e1e3", to_json(sc.bracket_of_basis(0, 2))},
              {"e2e3", to_json(sc.bracket_of_basis(1, 2))}};
}

/// Bracket file: `{"e1e2":["1","0","-2"],"e1e3":[...],"e2e3":[...]}`.
/// The table is not checked for the Jacobi identity here.
inline StructureConstants brackets_from_json(const Json& j) {
  auto vec = [&](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array() || j[key].size() != 3) {
      throw InputError(std::string("bracket file needs \"") + key + "\" as a list of 3 rationals");
    }
    Vec3 v;
    for (std::size_t k = 0; k < 3; ++k) v[k] = rat_from_json(j[key][k]);
    return v;
  };
  for (const auto& [key, value] : j.items()) {
    if (key != "e1e2" && key != "e1e3" && key != "e2e3") throw InputError("unknown bracket key '" + key + "'");
  }
  return StructureConstants::from_brackets(vec("e1e2"), vec("e1e3"), vec("e2e3"));
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
}

inline Json to_json(const SymBilinear& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    rows.push_back(to_json(Vec3{{t(i, 0), t(i, 1), t(i, 2)}}));
  }
  return rows;
}

inline Json index_json(const ComponentIndex& idx) {
  return Json::array({idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1});
}

/// All 81 components as [[i,j,k,l], "value"] pairs, 1-based, lexicographic.
inline Json tensor_components_json(const Tensor4& t, bool include_zero) {
  Json out = Json::array();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          if (!include_zero && t(i, j, k, l).is_zero()) continue;
          out.push_back(Json::array({index_json({i, j, k, l}), t(i, j, k, l).str()}));
        }
  return out;
}

inline Json curvature_json(const Curvature4& r, bool full) {
  Json out;
  const auto ind = r.independent();
  for (std::size_t n = 0; n < ind.size(); ++n) out[kIndependentCurvatureNames[n]] = ind[n].str();
  out["full"] = full;
  if (full) out["components"] = tensor_components_json(r.tensor(), true);
  return out;
}

inline std::string status_name(const AffineSolutionSet& s) {
  if (s.empty()) return "empty";
  return s.dimension() == 0 ? "unique" : "family";
}

inline Json to_json(const AffineSolutionSet& s) {
  Json out;
  out["status"] = status_name(s);
  if (s.empty()) {
    out["point"] = nullptr;
    out["dimension"] = nullptr;
    out["basis"] = Json::array();
  } else {
    out["point"] = to_json(*s.point);
    out["dimension"] = s.dimension();
    Json basis = Json::array();
    for (const auto& b : s.basis) basis.push_back(to_json(b));
    out["basis"] = basis;
  }
  return out;
}

inline Json verdict_json(const SolitonVerdict& v, const StructureConstants& sc) {
  Json out = to_json(v.solutions);
  out["spec"] = v.spec ? to_json(*v.spec) : Json{{"brackets", to_json(sc)}};
  out["unknowns"] = Json::array({"lambda1", "lambda2", "lambda3", "lambda"});
  Json cert = Json::array();
  if (v.certificate) {
    for (std::size_t r = 0; r < v.certificate->size(); ++r) {
      const Rat& w = (*v.certificate)[r];
      if (w.is_zero()) continue;
      cert.push_back(Json{{"component", index_json(v.system.provenance[r])}, {"weight", w.str()}});
    }
  }
  out["certificate"] = cert;
  return out;
}

/// Deterministic report (no timing).
inline Json report_json(const VerificationReport& r) {
  Json out;
  out["family"] = family_name(r.family);
  out["points_checked"] = r.points_checked;
  out["verdicts"] = Json{{"unique", r.unique}, {"family", r.families}, {"empty", r.empty}};
  Json mism = Json::array();
  for (const auto& m : r.mismatches) {
    mism.push_back(Json{{"grid_index", m.grid_index},
                        {"spec", to_json(m.spec)},
                        {"expected", to_json(m.expected)},
                        {"got", to_json(m.got)}});
  }
  out["mismatches"] = mism;
  out["mismatch_count"] = r.mismatches.size();
  out["pass"] = r.pass();
  return out;
}

}  // namespace solitonlab
