#include "solitonlab/classification.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

namespace solitonlab {
namespace {

using oracle::q;

GroupSpec spec(Family f, Rat a, Rat b, Rat c = 0, Rat d = 0, int eta = 1) {
  GroupSpec s{f, a, b, c, d, eta};
  EXPECT_TRUE(is_valid(s));
  return s;
}

TEST(ExpectedSolution, G5CaseI) {
  const auto s = expected_solution(spec(Family::G5, 1, 1, -1, 1));
  ASSERT_FALSE(s.empty());
  EXPECT_EQ(*s.point, (VecQ{0, 0, 0, -1}));
  EXPECT_EQ(s.dimension(), 0u);
}

TEST(ExpectedSolution, G4CaseII) {
  const auto s = expected_solution(spec(Family::G4, 1, 2, 0, 0, 1));
  ASSERT_FALSE(s.empty());
  EXPECT_EQ(*s.point, (VecQ{-1, 0, 0, q(1, 4)}));
  ASSERT_EQ(s.dimension(), 1u);
  // Canonical basis pivots on λ1, λ2, λ; the free variable is λ3.
  EXPECT_EQ(s.basis[0], (VecQ{0, -1, 1, 0}));
}

TEST(ExpectedSolution, G7CaseIII) {
  const auto s = expected_solution(spec(Family::G7, 1, 5, 0, 1));
  ASSERT_FALSE(s.empty());
  EXPECT_EQ(*s.point, (VecQ{0, 0, 0, 0}));
  EXPECT_EQ(s.dimension(), 0u);
}

TEST(ExpectedSolution, G2AlwaysEmpty) {
  EXPECT_TRUE(expected_solution(spec(Family::G2, 1, 1, 1)).empty());
}

TEST(ExpectedSolution, G4OverlapResolvedInCaseOrder) {
  // α = 0, β = η satisfies α − β + η = 0 (case ii) but not β ≠ η (case i).
  const auto s = spec(Family::G4, 0, 1, 0, 0, 1);
  EXPECT_EQ(matching_cases(s), (std::vector<std::string>{"G4(ii)"}));
}

TEST(DefaultGrid, G1) {
  const auto grid = default_grid(Family::G1);
  EXPECT_TRUE(std::any_of(grid.begin(), grid.end(),
                          [](const GroupSpec& s) { return s.alpha == q(1, 2) && s.beta == -3; }));
  EXPECT_TRUE(std::none_of(grid.begin(), grid.end(), [](const GroupSpec& s) { return s.alpha.is_zero(); }));
}

TEST(DefaultGrid, G6ContainsCaseIIPoint) {
  const auto grid = default_grid(Family::G6);
  EXPECT_TRUE(std::any_of(grid.begin(), grid.end(), [](const GroupSpec& s) {
    return s.alpha == 1 && s.beta == 1 && s.gamma == 2 && s.delta == 2;
  }));
}

TEST(DefaultGrid, G4CoversBothEtaSheets) {
  const auto grid = default_grid(Family::G4);
  auto has = [&](const Rat& a, const Rat& b, int eta) {
    return std::any_of(grid.begin(), grid.end(), [&](const GroupSpec& s) {
      return s.alpha == a && s.beta == b && s.eta == eta;
    });
  };
  for (int eta : {1, -1}) {
    for (const auto& a : dense_values()) {
      for (const auto& b : dense_values()) EXPECT_TRUE(has(a, b, eta));
      EXPECT_TRUE(has(a, a + eta, eta));  // case (ii) submanifold
      EXPECT_TRUE(has(a, Rat(eta), eta));
    }
  }
}

TEST(DefaultGrid, SizeValidityAndDeterminism) {
  for (auto f : kAllFamilies) {
    const auto grid = default_grid(f);
    EXPECT_GE(grid.size(), 500u) << family_name(f);
    for (const auto& s : grid) EXPECT_TRUE(is_valid(s));
    EXPECT_EQ(grid, default_grid(f));
  }
}

TEST(DefaultGrid, HitsNamedSubmanifolds) {
  auto has = [](Family f, auto pred) {
    const auto grid = default_grid(f);
    return std::any_of(grid.begin(), grid.end(), pred);
  };
  EXPECT_TRUE(has(Family::G3, [](const GroupSpec& s) { return s.alpha == s.beta && s.beta == s.gamma && !s.alpha.is_zero(); }));
  EXPECT_TRUE(has(Family::G4, [](const GroupSpec& s) { return s.beta == Rat(s.eta) && !s.alpha.is_zero(); }));
  EXPECT_TRUE(has(Family::G5, [](const GroupSpec& s) { return (s.beta + s.gamma).is_zero() && !s.beta.is_zero() && s.alpha == s.delta; }));
  EXPECT_TRUE(has(Family::G6, [](const GroupSpec& s) { return s.alpha.is_zero() && s.beta.is_zero() && s.delta == -s.gamma; }));
  EXPECT_TRUE(has(Family::G6, [](const GroupSpec& s) { return !s.alpha.is_zero() && s.alpha == -s.beta && s.delta == s.beta * s.gamma / s.alpha && s.beta != s.gamma; }));
  EXPECT_TRUE(has(Family::G7, [](const GroupSpec& s) { return s.alpha.is_zero() && s.gamma.is_zero() && !s.beta.is_zero(); }));
}

TEST(TheoremGuards, DisjointAndEveryCaseHitByGrid) {
  for (auto statement : {Statement::printed, Statement::corrected}) {
    for (auto f : kAllFamilies) {
      std::map<std::string, int> hits;
      for (const auto& s : default_grid(f)) {
        const auto m = matching_cases(s, statement);
        EXPECT_LE(m.size(), 1u) << family_name(f);
        for (const auto& label : m) ++hits[label];
      }
      for (const auto& c : theorem(f, statement).cases) EXPECT_GT(hits[c.label], 0) << c.label;
    }
  }
}

TEST(TheoremPredicates, ExpectedSetsSolveTheResidualEquation) {
  // Independent of the linear solver: substitute into the residual.
  for (auto statement : {Statement::printed, Statement::corrected}) {
    for (auto f : kAllFamilies) {
      const auto grid = default_grid(f);
      for (std::size_t i = 0; i < grid.size(); i += 3) {
        const auto s = expected_solution(grid[i], statement);
        if (s.empty()) continue;
        std::vector<VecQ> samples{*s.point};
        for (const auto& h : s.basis) {
          VecQ x = *s.point;
          for (std::size_t k = 0; k < 4; ++k) x[k] += q(-3, 2) * h[k];
          samples.push_back(x);
        }
        for (const auto& x : samples) {
          const auto [v, lambda] = split_unknowns(x);
          EXPECT_TRUE(soliton_residual(grid[i], v, lambda).is_zero())
              << family_name(f) << " grid index " << i;
        }
      }
    }
  }
}

class VerifyPrintedTheorem : public ::testing::TestWithParam<Family> {};

TEST_P(VerifyPrintedTheorem, NoMismatches) {
  const auto report = verify_family(GetParam());
  EXPECT_TRUE(report.pass()) << report.mismatches.size() << " mismatches";
  EXPECT_EQ(report.points_checked, default_grid(GetParam()).size());
}

INSTANTIATE_TEST_SUITE_P(FamiliesWithCorrectStatements, VerifyPrintedTheorem,
                         ::testing::Values(Family::G1, Family::G2, Family::G3, Family::G4, Family::G5, Family::G6),
                         [](const auto& info) { return family_name(info.param); });

TEST(VerifyFamily, G1AllUniqueG2AllEmpty) {
  const auto g1 = verify_family(Family::G1);
  EXPECT_EQ(g1.unique, g1.points_checked);
  const auto g2 = verify_family(Family::G2);
  EXPECT_EQ(g2.empty, g2.points_checked);
}

// The printed G7 case (iii) forces α = δ; its own reduced system does not.
TEST(G7Statement, PrintedCaseMissesSolitons) {
  const auto s = spec(Family::G7, 1, 0, 0, 3);
  EXPECT_TRUE(expected_solution(s).empty());
  const Rat t = q(2, 3);  // α(δ − α)/δ
  EXPECT_TRUE(soliton_residual(s, Vec3{{0, t, t}}, 0).is_zero());
  const auto report = verify_family(Family::G7);
  EXPECT_FALSE(report.pass());
  for (const auto& m : report.mismatches) {
    EXPECT_FALSE(m.spec.alpha.is_zero());
    EXPECT_TRUE(m.spec.gamma.is_zero());
    EXPECT_NE(m.spec.alpha, m.spec.delta);
  }
}

TEST(G7Statement, LambdaNonzeroSolitonsAtDeltaTwiceAlpha) {
  const auto s = spec(Family::G7, 1, 2, 0, 2);
  // Point (0, 1/2, 1/2, 0) plus t(−2αβ, β²−α², α²+β², 4α³) at t = 1.
  EXPECT_TRUE(soliton_residual(s, Vec3{{-4, q(7, 2), q(11, 2)}}, 4).is_zero());
  EXPECT_EQ(expected_solution(s, Statement::corrected).dimension(), 1u);
}

TEST(G7Statement, CorrectedMatchesSolverOnAllGrids) {
  for (auto f : kAllFamilies) {
    EXPECT_TRUE(verify_family(f, Statement::corrected).pass()) << family_name(f);
  }
}

TEST(VerifyFamily, ThreadCountDoesNotChangeReport) {
  const auto grid = default_grid(Family::G7);
  const std::vector<GroupSpec> part(grid.begin(), grid.begin() + 200);
  const auto one = verify_family(Family::G7, part, Statement::printed, 1);
  const auto four = verify_family(Family::G7, part, Statement::printed, 4);
  ASSERT_EQ(one.mismatches.size(), four.mismatches.size());
  for (std::size_t i = 0; i < one.mismatches.size(); ++i) {
    EXPECT_EQ(one.mismatches[i].grid_index, four.mismatches[i].grid_index);
    EXPECT_EQ(one.mismatches[i].got, four.mismatches[i].got);
  }
}

TEST(VerifyFamily, RejectsForeignGridPoints) {
  EXPECT_THROW(verify_family(Family::G1, {spec(Family::G2, 1, 1, 1)}), InputError);
}

}  // namespace
}  // namespace solitonlab
