#pragma once

// The classification of left-invariant Riemann solitons on G1..G7 as
// executable predicates, the default verification grids, and the sweep that
// compares predicates with the exact solver.

#include "solitonlab/lie_structure.hpp"
#include "solitonlab/linalg.hpp"
#include "solitonlab/soliton.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace solitonlab {

/// Which wording of the classification to encode.
///   printed   - the theorems exactly as stated.
///   corrected - G7 case (iii) replaced by the full α≠0 branch of its own
///               system. With α≠0, γ=0:
///                 δ≠0, δ≠2α: λ1=0, λ2=λ3=α(δ−α)/δ, λ=0 (unique);
///                 δ=2α: the line (0, α/2, α/2, 0) + t(−2αβ, β²−α², α²+β², 4α³);
///                 δ=0: no solution.
///               The printed case only covers α=δ.
enum class Statement { printed, corrected };

struct TheoremCase {
  std::string label;
  std::function<bool(const GroupSpec&)> guard;
  std::function<AffineSolutionSet(const GroupSpec&)> solutions;
};

struct TheoremPredicate {
  Family family;
  std::vector<TheoremCase> cases;  // evaluated in order; no match means Empty
};

namespace detail {
inline Rat q(int n, int d = 1) { return Rat(BigInt(n), BigInt(d)); }

inline AffineSolutionSet point_set(VecQ p) { return AffineSolutionSet::from_generators(p, {}); }
inline AffineSolutionSet line_set(VecQ p, VecQ dir) { return AffineSolutionSet::from_generators(p, {dir}); }
}  // namespace detail

inline TheoremPredicate theorem(Family family, Statement statement = Statement::printed) {
  using detail::line_set;
  using detail::point_set;
  using detail::q;
  using S = const GroupSpec&;
  TheoremPredicate t{family, {}};
  auto add = [&t](std::string label, std::function<bool(S)> guard, std::function<AffineSolutionSet(S)> sol) {
    t.cases.push_back({family_name(t.family) + "(" + label + ")", std::move(guard), std::move(sol)});
  };
  switch (family) {
    case Family::G1:
      add("unique", [](S) { return true; },
          [](S s) { return point_set({q(2) * s.beta, q(-2) * s.alpha, q(-2) * s.alpha, s.beta * s.beta / q(4)}); });
      break;
    case Family::G2:
      break;  // no solitons
    case Family::G3:
      add("i", [](S s) { return s.beta == s.gamma && s.alpha != s.gamma && s.alpha.is_zero(); },
          [](S) { return line_set({0, 0, 0, 0}, {1, 0, 0, 0}); });
      add("ii", [](S s) { return s.alpha == s.beta && s.beta == s.gamma; },
          [](S s) {
            return AffineSolutionSet::from_generators({0, 0, 0, s.alpha * s.alpha / q(4)},
                                                      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
          });
      add("iii", [](S s) { return s.beta != s.gamma && s.alpha == s.beta && s.gamma.is_zero(); },
          [](S) { return line_set({0, 0, 0, 0}, {0, 0, 1, 0}); });
      add("iv", [](S s) { return s.beta != s.gamma && s.alpha == s.gamma && s.beta.is_zero(); },
          [](S) { return line_set({0, 0, 0, 0}, {0, 1, 0, 0}); });
      break;
    case Family::G4:
      add("i", [](S s) { return s.beta != Rat(s.eta) && s.alpha.is_zero(); },
          [](S s) { return point_set({q(2) - q(2) * s.eta * s.beta, 0, 0, 0}); });
      add("ii", [](S s) { return (s.alpha - s.beta + s.eta).is_zero(); },
          [](S s) {
            return line_set({q(1) - s.eta * s.beta, 0, 0, s.alpha * s.alpha / q(4)}, {0, -s.eta, 1, 0});
          });
      break;
    case Family::G5:
      add("i", [](S s) { return (s.beta + s.gamma).is_zero() && !s.beta.is_zero() && s.alpha == s.delta && !s.alpha.is_zero(); },
          [](S s) { return point_set({0, 0, 0, -s.alpha * s.alpha}); });
      add("ii", [](S s) { return s.beta.is_zero() && s.gamma.is_zero() && s.alpha == s.delta && !s.alpha.is_zero(); },
          [](S s) { return point_set({0, 0, 0, -s.alpha * s.alpha}); });
      break;
    case Family::G6:
      add("i", [](S s) { return s.beta != s.gamma && s.alpha.is_zero() && s.beta.is_zero() && s.delta * s.delta == s.gamma * s.gamma; },
          [](S s) { return line_set({0, 0, 0, s.gamma * s.gamma / q(4)}, {0, 1, 0, 0}); });
      add("ii",
          [](S s) {
            return s.beta != s.gamma && !s.alpha.is_zero() && s.alpha * s.alpha == s.beta * s.beta &&
                   s.delta == s.beta * s.gamma / s.alpha;
          },
          [](S s) {
            const Rat sum = s.beta + s.gamma;
            return line_set({0, 0, 0, sum * sum / q(4)}, {0, -s.gamma / s.alpha, 1, 0});
          });
      // (iii) and (iv) share the parameter guard β=γ≠0, α=δ≠0; (iv) adds
      // α²=β², where the solution point of (iii) lies on the line of (iv).
      add("iii",
          [](S s) {
            return s.beta == s.gamma && !s.beta.is_zero() && s.alpha == s.delta && !s.alpha.is_zero() &&
                   s.alpha * s.alpha != s.beta * s.beta;
          },
          [](S s) { return point_set({0, 0, 0, s.alpha * s.alpha}); });
      add("iv",
          [](S s) {
            return s.beta == s.gamma && !s.beta.is_zero() && s.alpha == s.delta && !s.alpha.is_zero() &&
                   s.alpha * s.alpha == s.beta * s.beta;
          },
          [](S s) { return line_set({0, 0, 0, s.alpha * s.alpha}, {0, -s.delta / s.beta, 1, 0}); });
      add("v",
          [](S s) {
            return s.beta.is_zero() && s.gamma.is_zero() && !s.alpha.is_zero() && !s.delta.is_zero() &&
                   s.alpha == s.delta;
          },
          [](S s) { return point_set({0, 0, 0, s.alpha * s.alpha}); });
      break;
    case Family::G7:
      add("i", [](S s) { return s.alpha.is_zero() && !s.delta.is_zero() && s.beta.is_zero() && s.gamma.is_zero(); },
          [](S) { return line_set({0, 0, 0, 0}, {1, 0, 0, 0}); });
      add("ii", [](S s) { return s.alpha.is_zero() && !s.delta.is_zero() && s.gamma.is_zero() && !s.beta.is_zero(); },
          [](S s) { return line_set({0, 0, 0, 0}, {-s.delta / s.beta, 1, 1, 0}); });
      if (statement == Statement::printed) {
        add("iii", [](S s) { return !s.alpha.is_zero() && s.gamma.is_zero() && s.alpha == s.delta; },
            [](S) { return point_set({0, 0, 0, 0}); });
      } else {
        add("iii*",
            [](S s) {
              return !s.alpha.is_zero() && s.gamma.is_zero() && !s.delta.is_zero() && s.delta != q(2) * s.alpha;
            },
            [](S s) {
              const Rat t = s.alpha * (s.delta - s.alpha) / s.delta;
              return point_set({0, t, t, 0});
            });
        add("iv*", [](S s) { return !s.alpha.is_zero() && s.gamma.is_zero() && s.delta == q(2) * s.alpha; },
            [](S s) {
              const Rat& a = s.alpha;
              const Rat& b = s.beta;
              return line_set({0, a / q(2), a / q(2), 0},
                              {q(-2) * a * b, b * b - a * a, a * a + b * b, q(4) * a * a * a});
            });
      }
      break;
  }
  return t;
}

/// Labels of every case whose guard accepts the spec.
inline std::vector<std::string> matching_cases(const GroupSpec& spec, Statement statement = Statement::printed) {
  std::vector<std::string> out;
  for (const auto& c : theorem(spec.family, statement).cases) {
    if (c.guard(spec)) out.push_back(c.label);
  }
  return out;
}

/// The solution set in (λ1, λ2, λ3, λ) that the classification asserts.
inline AffineSolutionSet expected_solution(const GroupSpec& spec, Statement statement = Statement::printed) {
  for (const auto& c : theorem(spec.family, statement).cases) {
    if (c.guard(spec)) return c.solutions(spec);
  }
  return AffineSolutionSet::make_empty();
}

// ---------------------------------------------------------------------------
// Grids

/// Generic parameter values.
inline std::vector<Rat> base_values() {
  using detail::q;
  return {q(-3), q(-2), q(-1), q(-1, 2), q(1, 2), q(1), q(2), q(3)};
}

/// Denser ladder for the two-parameter families.
inline std::vector<Rat> dense_values() {
  using detail::q;
  auto v = base_values();
  for (Rat extra : {q(0), q(1, 3), q(2, 3), q(3, 2), q(5, 2), q(4), q(5), q(7, 2)}) {
    v.push_back(extra);
    if (!extra.is_zero()) v.push_back(-extra);
  }
  return v;
}

namespace detail {
inline std::vector<Rat> with_zero(std::vector<Rat> v) {
  v.push_back(Rat(0));
  return v;
}

class GridBuilder {
 public:
  explicit GridBuilder(Family f) : family_(f) {}

  void add(Rat a, Rat b, Rat c, Rat d, int eta = 1) {
    GroupSpec s{family_, std::move(a), std::move(b), std::move(c), std::move(d), eta};
    // Zero out symbols the family does not use so the key is canonical.
    const auto names = family_parameters(family_);
    auto uses = [&](const char* n) { return std::find(names.begin(), names.end(), n) != names.end(); };
    if (!uses("gamma")) s.gamma = 0;
    if (!uses("delta")) s.delta = 0;
    if (!family_uses_eta(family_)) s.eta = 1;
    if (!is_valid(s)) return;
    const std::string key = s.alpha.str() + "," + s.beta.str() + "," + s.gamma.str() + "," + s.delta.str() +
                            "," + std::to_string(s.eta);
    if (keys_.insert(key).second) points_.push_back(std::move(s));
  }
  std::vector<GroupSpec> take() { return std::move(points_); }

 private:
  Family family_;
  std::set<std::string> keys_;
  std::vector<GroupSpec> points_;
};
}  // namespace detail

/// Deterministic verification grid: generic points plus points on every
/// constraint submanifold appearing in the case analysis, filtered by the
/// family's validity constraints.
inline std::vector<GroupSpec> default_grid(Family family) {
  using detail::q;
  const auto base = base_values();
  const auto base0 = detail::with_zero(base);
  const auto dense = dense_values();
  detail::GridBuilder g(family);
  const Rat zero;

  switch (family) {
    case Family::G1:
      for (const auto& a : dense)
        for (const auto& b : dense) g.add(a, b, zero, zero);
      break;
    case Family::G2:
      for (const auto& a : base0)
        for (const auto& b : base0)
          for (const auto& c : base) g.add(a, b, c, zero);
      for (const auto& a : base0)
        for (const auto& c : base) {
          g.add(a, a / q(2), c, zero);  // 2β = α
          g.add(a, a, c, zero);
        }
      break;
    case Family::G3:
      for (const auto& a : base0)
        for (const auto& b : base0)
          for (const auto& c : base0) g.add(a, b, c, zero);
      for (const auto& a : base0)
        for (const auto& b : base0) {
          g.add(a, b, b, zero);      // β = γ
          g.add(a, a, b, zero);      // α = β
          g.add(a, b, a, zero);      // α = γ
          g.add(a, a, a, zero);      // α = β = γ
          g.add(zero, b, b, zero);   // (i)
          g.add(a, a, zero, zero);   // (iii)
          g.add(a, zero, a, zero);   // (iv)
          g.add(a + b, a, b, zero);  // α = β + γ
          g.add(b - a, a, b, zero);  // α = γ − β
        }
      break;
    case Family::G4:
      for (int eta : {1, -1}) {
        for (const auto& a : dense)
          for (const auto& b : dense) g.add(a, b, zero, zero, eta);
        for (const auto& a : dense) {
          g.add(a, a + eta, zero, zero, eta);  // α − β + η = 0
          g.add(a, Rat(eta), zero, zero, eta); // β = η
          g.add(zero, a, zero, zero, eta);     // α = 0
        }
      }
      break;
    case Family::G5:
      for (const auto& a : base0)
        for (const auto& b : base0)
          for (const auto& d : base0) {
            if (!a.is_zero()) {
              g.add(a, b, -b * d / a, d);  // αγ + βδ = 0 solved for γ
            } else {
              g.add(zero, zero, b, d);
              g.add(zero, b, d, zero);
            }
          }
      for (const auto& a : base)
        for (const auto& b : base0) {
          g.add(a, b, -b, a);         // β + γ = 0, α = δ
          g.add(a, zero, zero, a);    // β = γ = 0, α = δ
          g.add(a, zero, zero, -a);   // α + δ = 0 (rejected)
          g.add(a, b, zero, zero);    // δ = 0
        }
      break;
    case Family::G6:
      for (const auto& a : base0)
        for (const auto& b : base0)
          for (const auto& c : base0) {
            if (!b.is_zero()) {
              g.add(a, b, c, a * c / b);  // αγ − βδ = 0 solved for δ
            } else {
              g.add(a, zero, zero, c);    // β = 0 forces αγ = 0
              g.add(zero, zero, a, c);
            }
          }
      for (const auto& a : base)
        for (const auto& c : base0) {
          g.add(zero, zero, c, c);        // (i): α = β = 0, δ² = γ²
          g.add(zero, zero, c, -c);
          g.add(a, a, c, c);              // (ii): α² = β², δ = βγ/α
          g.add(a, -a, c, -c);
          g.add(a, c, c, a);              // (iii): β = γ, α = δ
          g.add(a, a, a, a);              // (iv): β = γ, α = δ, α² = β²
          g.add(a, -a, -a, a);
          g.add(a, zero, zero, a);        // (v)
          g.add(a, zero, zero, c);
          g.add(zero, zero, a, c);
        }
      break;
    case Family::G7:
      for (const auto& x : base0)
        for (const auto& y : base0)
          for (const auto& z : base0) {
            g.add(zero, x, y, z);  // α = 0
            g.add(x, y, zero, z);  // γ = 0
          }
      for (const auto& a : base)
        for (const auto& b : base0) {
          g.add(a, b, zero, a);     // α = δ
          g.add(a, b, zero, zero);  // δ = 0
          g.add(zero, zero, zero, a);
          g.add(zero, b, zero, a);
        }
      break;
  }
  return g.take();
}

// ---------------------------------------------------------------------------
// Verification

struct Mismatch {
  std::size_t grid_index = 0;
  GroupSpec spec;
  AffineSolutionSet expected;
  AffineSolutionSet got;
};

struct VerificationReport {
  Family family = Family::G1;
  std::size_t points_checked = 0;
  std::size_t unique = 0;      // solver verdicts with a single solution
  std::size_t families = 0;    // solver verdicts with a positive-dimensional set
  std::size_t empty = 0;
  std::vector<Mismatch> mismatches;
  std::chrono::duration<double> elapsed{0};

  bool pass() const { return mismatches.empty(); }
};

/// Worker count from SOLITON_LAB_THREADS (0 or unset = hardware concurrency).
inline unsigned verification_threads() {
  unsigned n = 0;
  if (const char* env = std::getenv("SOLITON_LAB_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

inline VerificationReport verify_family(Family family, const std::vector<GroupSpec>& grid,
                                        Statement statement = Statement::printed,
                                        unsigned threads = verification_threads()) {
  const auto start = std::chrono::steady_clock::now();
  struct Outcome {
    AffineSolutionSet expected, got;
  };
  std::vector<Outcome> outcomes(grid.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      if (grid[i].family != family) throw InputError("grid point belongs to " + family_name(grid[i].family));
      outcomes[i].got = solve_soliton(grid[i]).solutions;
      outcomes[i].expected = expected_solution(grid[i], statement);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1))));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work();
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  VerificationReport report;
  report.family = family;
  report.points_checked = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.got.empty()) {
      ++report.empty;
    } else if (o.got.dimension() == 0) {
      ++report.unique;
    } else {
      ++report.families;
    }
    if (!(o.got == o.expected)) report.mismatches.push_back({i, grid[i], o.expected, o.got});
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

inline VerificationReport verify_family(Family family, Statement statement = Statement::printed) {
  return verify_family(family, default_grid(family), statement);
}

}  // namespace solitonlab
