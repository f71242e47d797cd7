#pragma once

// Structure constants of 3-dimensional Lie algebras on the pseudo-orthonormal
// frame {e1, e2, e3} (e3 timelike), and constructors for the seven Lorentzian
// families G1..G7.

#include "solitonlab/linalg.hpp"
#include "solitonlab/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace solitonlab {

/// [e_i, e_j] = sum_k c(i, j, k) e_k, indices 0-based.
class StructureConstants {
 public:
  StructureConstants() = default;

  /// Builds an antisymmetric table from the three independent brackets
  /// [e1,e2], [e1,e3], [e2,e3].
  static StructureConstants from_brackets(const Vec3& e12, const Vec3& e13, const Vec3& e23) {
    StructureConstants sc;
    sc.set(0, 1, e12);
    sc.set(0, 2, e13);
    sc.set(1, 2, e23);
    return sc;
  }

  const Rat& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[idx(i, j, k)]; }

  Vec3 bracket_of_basis(std::size_t i, std::size_t j) const {
    return Vec3{{(*this)(i, j, 0), (*this)(i, j, 1), (*this)(i, j, 2)}};
  }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  static constexpr std::size_t idx(std::size_t i, std::size_t j, std::size_t k) { return (i * 3 + j) * 3 + k; }
  void set(std::size_t i, std::size_t j, const Vec3& v) {
    for (std::size_t k = 0; k < 3; ++k) {
      c_[idx(i, j, k)] = v[k];
      c_[idx(j, i, k)] = -v[k];
    }
  }
  std::array<Rat, 27> c_{};
};

inline Vec3 bracket(const StructureConstants& sc, const Vec3& x, const Vec3& y) {
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Rat w = x[i] * y[j];
      for (std::size_t k = 0; k < 3; ++k) {
        if (!sc(i, j, k).is_zero()) out[k] += w * sc(i, j, k);
      }
    }
  }
  return out;
}

/// [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2]; zero iff the Jacobi identity holds.
inline Vec3 jacobi_defect(const StructureConstants& sc) {
  const Vec3 e1 = Vec3::basis(0), e2 = Vec3::basis(1), e3 = Vec3::basis(2);
  return bracket(sc, bracket(sc, e1, e2), e3) + bracket(sc, bracket(sc, e2, e3), e1) +
         bracket(sc, bracket(sc, e3, e1), e2);
}

enum class Family { G1 = 1, G2, G3, G4, G5, G6, G7 };

inline constexpr std::array<Family, 7> kAllFamilies{Family::G1, Family::G2, Family::G3, Family::G4,
                                                    Family::G5, Family::G6, Family::G7};

inline std::string family_name(Family f) { return "G" + std::to_string(static_cast<int>(f)); }

/// Accepts "G1".."G7" and "g1".."g7".
inline Family parse_family(std::string_view text) {
  if (text.size() == 2 && (text[0] == 'G' || text[0] == 'g') && text[1] >= '1' && text[1] <= '7') {
    return static_cast<Family>(text[1] - '0');
  }
  throw InputError("unknown family '" + std::string(text) + "' (expected g1..g7)");
}

/// Raised when parameters violate a family's defining constraints.
class ConstraintViolation : public InputError {
 public:
  using InputError::InputError;
};

/// A family plus its validated parameters. Unused parameters stay zero.
struct GroupSpec {
  Family family = Family::G1;
  Rat alpha, beta, gamma, delta;
  int eta = 1;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Rational parameter names used by a family, in presentation order.
inline std::vector<std::string> family_parameters(Family f) {
  switch (f) {
    case Family::G1: return {"alpha", "beta"};
    case Family::G2:
    case Family::G3: return {"alpha", "beta", "gamma"};
    case Family::G4: return {"alpha", "beta"};
    case Family::G5:
    case Family::G6:
    case Family::G7: return {"alpha", "beta", "gamma", "delta"};
  }
  return {};
}

inline bool family_uses_eta(Family f) { return f == Family::G4; }

/// Names of the constraints the spec violates (empty when valid).
inline std::vector<std::string> constraint_violations(const GroupSpec& s) {
  std::vector<std::string> bad;
  const auto& [f, a, b, c, d, eta] = s;
  switch (f) {
    case Family::G1:
      if (a.is_zero()) bad.emplace_back("alpha != 0");
      break;
    case Family::G2:
      if (c.is_zero()) bad.emplace_back("gamma != 0");
      break;
    case Family::G3: break;
    case Family::G4:
      if (eta != 1 && eta != -1) bad.emplace_back("eta = 1 or -1");
      break;
    case Family::G5:
      if ((a + d).is_zero()) bad.emplace_back("alpha + delta != 0");
      if (!(a * c + b * d).is_zero()) bad.emplace_back("alpha*gamma + beta*delta = 0");
      break;
    case Family::G6:
      if ((a + d).is_zero()) bad.emplace_back("alpha + delta != 0");
      if (!(a * c - b * d).is_zero()) bad.emplace_back("alpha*gamma - beta*delta = 0");
      break;
    case Family::G7:
      if ((a + d).is_zero()) bad.emplace_back("alpha + delta != 0");
      if (!(a * c).is_zero()) bad.emplace_back("alpha*gamma = 0");
      break;
  }
  return bad;
}

inline bool is_valid(const GroupSpec& s) { return constraint_violations(s).empty(); }

/// Bracket table of the family at the spec's parameters.
inline StructureConstants structure_constants(const GroupSpec& s) {
  const Rat& a = s.alpha;
  const Rat& b = s.beta;
  const Rat& c = s.gamma;
  const Rat& d = s.delta;
  const Rat eta(s.eta);
  const Rat zero;
  switch (s.family) {
    case Family::G1:
      return StructureConstants::from_brackets({{a, zero, -b}}, {{-a, -b, zero}}, {{b, a, a}});
    case Family::G2:
      return StructureConstants::from_brackets({{zero, c, -b}}, {{zero, -b, -c}}, {{a, zero, zero}});
    case Family::G3:
      return StructureConstants::from_brackets({{zero, zero, -c}}, {{zero, -b, zero}}, {{a, zero, zero}});
    case Family::G4:
      return StructureConstants::from_brackets({{zero, Rat(-1), Rat(2) * eta - b}}, {{zero, -b, Rat(1)}},
                                               {{a, zero, zero}});
    case Family::G5:
      return StructureConstants::from_brackets({{zero, zero, zero}}, {{a, b, zero}}, {{c, d, zero}});
    case Family::G6:
      return StructureConstants::from_brackets({{zero, a, b}}, {{zero, c, d}}, {{zero, zero, zero}});
    case Family::G7:
      return StructureConstants::from_brackets({{-a, -b, -b}}, {{a, b, b}}, {{c, d, d}});
  }
  throw std::logic_error("unreachable family");
}

/// Validated group: spec plus its bracket table.
struct LieGroup {
  GroupSpec spec;
  StructureConstants sc;
};

/// Builds and validates a group from named parameters.
///
/// `params` must name exactly the family's rational symbols; `eta` is required
/// for G4 and rejected for the other families.
inline LieGroup make_group(Family family, const std::map<std::string, Rat>& params,
                           std::optional<int> eta = std::nullopt) {
  const auto names = family_parameters(family);
  const std::set<std::string> wanted(names.begin(), names.end());
  for (const auto& [key, value] : params) {
    if (!wanted.count(key)) {
      throw InputError("parameter '" + key + "' is not used by " + family_name(family));
    }
  }
  GroupSpec spec;
  spec.family = family;
  for (const auto& name : names) {
    auto it = params.find(name);
    if (it == params.end()) throw InputError(family_name(family) + " requires parameter '" + name + "'");
    if (name == "alpha") spec.alpha = it->second;
    if (name == "beta") spec.beta = it->second;
    if (name == "gamma") spec.gamma = it->second;
    if (name == "delta") spec.delta = it->second;
  }
  if (family_uses_eta(family)) {
    if (!eta) throw InputError("G4 requires eta (1 or -1)");
    spec.eta = *eta;
  } else if (eta) {
    throw InputError("eta is only used by G4");
  }
  const auto bad = constraint_violations(spec);
  if (!bad.empty()) {
    std::string msg = family_name(family) + " constraint violated:";
    for (const auto& b : bad) msg += " " + b + ";";
    msg.pop_back();
    throw ConstraintViolation(msg);
  }
  return {spec, structure_constants(spec)};
}

inline LieGroup make_group(const GroupSpec& spec) {
  std::map<std::string, Rat> params;
  for (const auto& name : family_parameters(spec.family)) {
    if (name == "alpha") params[name] = spec.alpha;
    if (name == "beta") params[name] = spec.beta;
    if (name == "gamma") params[name] = spec.gamma;
    if (name == "delta") params[name] = spec.delta;
  }
  return make_group(spec.family, params,
                    family_uses_eta(spec.family) ? std::optional<int>(spec.eta) : std::nullopt);
}

/// a1..a3 (G3) or b1..b3 (G4).
struct DerivedConstants {
  std::array<Rat, 3> values{};
  char symbol = 'a';
};

inline DerivedConstants derived_constants(const GroupSpec& s) {
  const Rat half(BigInt(1), BigInt(2));
  if (s.family == Family::G3) {
    return {{half * (s.alpha - s.beta - s.gamma), half * (s.alpha - s.beta + s.gamma),
             half * (s.alpha + s.beta - s.gamma)},
            'a'};
  }
  if (s.family == Family::G4) {
    const Rat eta(s.eta);
    return {{half * s.alpha + eta - s.beta, half * s.alpha - eta, half * s.alpha + eta}, 'b'};
  }
  throw InputError(family_name(s.family) + " has no derived constants");
}

}  // namespace solitonlab
