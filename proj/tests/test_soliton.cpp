#include "solitonlab/soliton.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace solitonlab {
namespace {

using oracle::q;

GroupSpec g1_12() { return make_group(Family::G1, {{"alpha", 1}, {"beta", 2}}).spec; }

TEST(Residual, G1SolitonVanishes) {
  EXPECT_TRUE(soliton_residual(g1_12(), Vec3{{4, -2, -2}}, 1).is_zero());
}

TEST(Residual, G1WrongLambda) {
  const Tensor4 r = soliton_residual(g1_12(), Vec3{{4, -2, -2}}, 0);
  EXPECT_EQ(r(0, 1, 1, 0), 2);
  // Only the λ (g∧g) term differs from the vanishing residual.
  const Tensor4 gg = kulkarni_nomizu(Metric::lorentzian().form(), Metric::lorentzian().form());
  EXPECT_EQ(r, gg);
}

TEST(Residual, ZeroFieldIsTwiceCurvature) {
  oracle::SpecSampler sampler(41);
  for (auto f : kAllFamilies) {
    const auto spec = sampler.draw_spec(f);
    const Tensor4 r = soliton_residual(spec, Vec3{}, 0);
    EXPECT_EQ(r, Rat(2) * curvature(make_group(spec).sc, Metric::lorentzian()).tensor());
  }
}

bool has_normalized_row(const SolitonSystem& sys, const std::vector<Rat>& want) {
  for (std::size_t r = 0; r < sys.a.rows(); ++r) {
    std::vector<Rat> row(sys.a.row(r).begin(), sys.a.row(r).end());
    row.push_back(sys.b[r]);
    if (detail::normalized_row(row) == want) return true;
  }
  return false;
}

TEST(SolitonSystem, G1ContainsLambda1Row) {
  const auto sys = build_soliton_system(g1_12());
  EXPECT_TRUE(has_normalized_row(sys, {1, 0, 0, 0, 4}));
}

TEST(SolitonSystem, G1Ranks) {
  const auto sys = build_soliton_system(g1_12());
  MatQ aug(0, 5);
  for (std::size_t r = 0; r < sys.a.rows(); ++r) {
    std::vector<Rat> row(sys.a.row(r).begin(), sys.a.row(r).end());
    row.push_back(sys.b[r]);
    aug.append_row(row);
  }
  // Oracle: ranks of the reduced six-equation system.
  const auto [a6, b6] = oracle::six_equation_system(g1_12());
  MatQ aug6(0, 5);
  for (std::size_t r = 0; r < a6.rows(); ++r) {
    std::vector<Rat> row(a6.row(r).begin(), a6.row(r).end());
    row.push_back(b6[r]);
    aug6.append_row(row);
  }
  EXPECT_EQ(rank(a6), 4u);
  EXPECT_EQ(rank(aug6), 4u);
  EXPECT_EQ(rank(sys.a), 4u);
  EXPECT_EQ(rank(aug), 4u);
}

TEST(SolitonSystem, G2Inconsistent) {
  const auto spec = make_group(Family::G2, {{"alpha", 1}, {"beta", 1}, {"gamma", 1}}).spec;
  const auto sys = build_soliton_system(spec);
  MatQ aug(0, 5);
  for (std::size_t r = 0; r < sys.a.rows(); ++r) {
    std::vector<Rat> row(sys.a.row(r).begin(), sys.a.row(r).end());
    row.push_back(sys.b[r]);
    aug.append_row(row);
  }
  EXPECT_LT(rank(sys.a), rank(aug));
}

TEST(SolitonSystem, RowsAreDistinctAndTracked) {
  const auto sys = build_soliton_system(g1_12());
  EXPECT_EQ(sys.provenance.size(), sys.a.rows());
  EXPECT_EQ(sys.b.size(), sys.a.rows());
  EXPECT_LE(rank(sys.a), 6u);
}

TEST(SolveSoliton, G1Unique) {
  const auto v = solve_soliton(g1_12());
  ASSERT_FALSE(v.solutions.empty());
  EXPECT_EQ(*v.solutions.point, (VecQ{4, -2, -2, 1}));
  EXPECT_EQ(v.solutions.dimension(), 0u);
  EXPECT_FALSE(v.certificate.has_value());
}

TEST(SolveSoliton, G2Empty) {
  const auto v = solve_soliton(make_group(Family::G2, {{"alpha", 2}, {"beta", 1}, {"gamma", 3}}).spec);
  EXPECT_TRUE(v.solutions.empty());
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_TRUE(check_certificate(v.system.a, v.system.b, *v.certificate));
}

TEST(SolveSoliton, G3AllEqualHasFreeField) {
  const auto v = solve_soliton(make_group(Family::G3, {{"alpha", 2}, {"beta", 2}, {"gamma", 2}}).spec);
  ASSERT_FALSE(v.solutions.empty());
  EXPECT_EQ(*v.solutions.point, (VecQ{0, 0, 0, 1}));
  const std::vector<VecQ> basis{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  EXPECT_EQ(v.solutions.basis, basis);
}

TEST(SolitonProperty, ReductionEquivalenceSoundnessAndCertificates) {
  oracle::SpecSampler sampler(42);
  for (auto f : kAllFamilies) {
    for (int n = 0; n < 40; ++n) {
      const auto spec = sampler.draw_spec(f);
      const auto verdict = solve_soliton(spec);
      const auto [a6, b6] = oracle::six_equation_system(spec);
      EXPECT_EQ(verdict.solutions, solve_affine(a6, b6)) << family_name(f);
      if (verdict.solutions.empty()) {
        ASSERT_TRUE(verdict.certificate.has_value());
        EXPECT_TRUE(check_certificate(verdict.system.a, verdict.system.b, *verdict.certificate));
        continue;
      }
      auto check = [&](const VecQ& x) {
        const auto [v, lambda] = split_unknowns(x);
        EXPECT_TRUE(soliton_residual(spec, v, lambda).is_zero()) << family_name(f);
      };
      check(*verdict.solutions.point);
      for (const auto& h : verdict.solutions.basis) {
        VecQ x = *verdict.solutions.point;
        for (std::size_t k = 0; k < 4; ++k) x[k] += h[k];
        check(x);
      }
    }
  }
}

TEST(SolitonProperty, ResidualIsAffineInVAndLambda) {
  oracle::SpecSampler sampler(43);
  for (auto f : kAllFamilies) {
    for (int n = 0; n < 20; ++n) {
      const auto spec = sampler.draw_spec(f);
      const Vec3 v1 = sampler.draw_vec(), v2 = sampler.draw_vec();
      const Rat l1 = sampler.draw(), l2 = sampler.draw();
      EXPECT_EQ(soliton_residual(spec, v1 + v2, l1 + l2) + soliton_residual(spec, Vec3{}, 0),
                soliton_residual(spec, v1, l1) + soliton_residual(spec, v2, l2));
    }
  }
}

}  // namespace
}  // namespace solitonlab
