#pragma once

// The Riemann soliton condition  R + ½ L_V g ∧ g = (λ/2) g ∧ g  for a
// left-invariant V = λ1 e1 + λ2 e2 + λ3 e3, written componentwise as
//
//   2R(X,Y,Z,W) + (g ∧ L_V g)(X,Y,Z,W) − λ (g ∧ g)(X,Y,Z,W) = 0
//
// and assembled as an exact linear system in x = (λ1, λ2, λ3, λ).

#include "solitonlab/geometry.hpp"
#include "solitonlab/lie_structure.hpp"
#include "solitonlab/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace solitonlab {

inline constexpr std::size_t kUnknowns = 4;  // λ1, λ2, λ3, λ

/// LHS − RHS of the componentwise soliton equation, all 81 components.
inline Tensor4 soliton_residual(const StructureConstants& sc, const Vec3& v, const Rat& lambda) {
  const Metric g = Metric::lorentzian();
  const Tensor4 r = curvature(sc, g).tensor();
  const SymBilinear lvg = lie_derivative_metric(sc, g, v);
  return Rat(2) * r + kulkarni_nomizu(g.form(), lvg) - lambda * kulkarni_nomizu(g.form(), g.form());
}

inline Tensor4 soliton_residual(const GroupSpec& spec, const Vec3& v, const Rat& lambda) {
  return soliton_residual(make_group(spec).sc, v, lambda);
}

using ComponentIndex = std::array<std::size_t, 4>;

struct SolitonSystem {
  MatQ a{0, kUnknowns};
  VecQ b;
  std::vector<ComponentIndex> provenance;  // 0-based (i,j,k,l) per row
};

namespace detail {
// Scales a row of [A|b] so its first nonzero entry is 1.
inline std::vector<Rat> normalized_row(std::vector<Rat> row) {
  auto lead = std::find_if(row.begin(), row.end(), [](const Rat& r) { return !r.is_zero(); });
  if (lead == row.end()) return row;
  const Rat inv = Rat(1) / *lead;
  for (auto& v : row) v *= inv;
  return row;
}
}  // namespace detail

/// One row per curvature component (i,j,k,l), in lexicographic order; all-zero
/// rows and rows proportional to an earlier row are dropped.
inline SolitonSystem build_soliton_system(const StructureConstants& sc) {
  const Metric g = Metric::lorentzian();
  const Tensor4 r = curvature(sc, g).tensor();
  // L_V g is linear in V, so the column of λm is g ∧ L_{e_m} g.
  std::array<Tensor4, 3> lie_cols;
  for (std::size_t m = 0; m < 3; ++m) {
    lie_cols[m] = kulkarni_nomizu(g.form(), lie_derivative_metric(sc, g, Vec3::basis(m)));
  }
  const Tensor4 gg = kulkarni_nomizu(g.form(), g.form());

  SolitonSystem sys;
  std::vector<std::vector<Rat>> seen;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t l = 0; l < 3; ++l) {
          std::vector<Rat> row{lie_cols[0](i, j, k, l), lie_cols[1](i, j, k, l), lie_cols[2](i, j, k, l),
                               -gg(i, j, k, l), Rat(-2) * r(i, j, k, l)};
          auto key = detail::normalized_row(row);
          if (std::all_of(key.begin(), key.end(), [](const Rat& v) { return v.is_zero(); })) continue;
          if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
          seen.push_back(std::move(key));
          sys.a.append_row(std::span<const Rat>(row.data(), kUnknowns));
          sys.b.push_back(row[kUnknowns]);
          sys.provenance.push_back({i, j, k, l});
        }
      }
    }
  }
  return sys;
}

inline SolitonSystem build_soliton_system(const GroupSpec& spec) {
  return build_soliton_system(make_group(spec).sc);
}

struct SolitonVerdict {
  std::optional<GroupSpec> spec;  // absent for custom bracket tables
  SolitonSystem system;
  AffineSolutionSet solutions;
  /// Row weights proving 0 = 1 when `solutions` is empty.
  std::optional<VecQ> certificate;
};

inline SolitonVerdict solve_soliton(const StructureConstants& sc) {
  SolitonVerdict v;
  v.system = build_soliton_system(sc);
  v.solutions = solve_affine(v.system.a, v.system.b);
  if (v.solutions.empty()) v.certificate = inconsistency_certificate(v.system.a, v.system.b);
  return v;
}

inline SolitonVerdict solve_soliton(const GroupSpec& spec) {
  auto v = solve_soliton(make_group(spec).sc);
  v.spec = spec;
  return v;
}

/// Splits an unknown vector (λ1, λ2, λ3, λ) into V and λ.
inline std::pair<Vec3, Rat> split_unknowns(std::span<const Rat> x) {
  return {Vec3{{x[0], x[1], x[2]}}, x[3]};
}

}  // namespace solitonlab
