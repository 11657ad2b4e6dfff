#include "bwak/oracle.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "lp_oracles.hpp"

namespace bwak {
namespace {

const std::vector<double> kMu4{0.45, 0.7, 0.8};
const std::vector<double> kRho4{0.3, 0.75, 0.8};
const std::vector<double> kMu9{0.35, 0.45, 0.52, 0.72, 0.84, 0.9, 0.92, 0.9};
const std::vector<double> kRho9{0.25, 0.3, 0.4, 0.6, 0.7, 0.75, 0.8, 0.85};

void ExpectValidSolution(const LpSolution& sol, const std::vector<double>& rho, double c) {
  double sum = 0.0, cost = 0.0;
  int nonzero = 0;
  for (std::size_t i = 0; i < sol.policy.size(); ++i) {
    EXPECT_GE(sol.policy[i], 0.0);
    sum += sol.policy[i];
    cost += sol.policy[i] * (i < rho.size() ? rho[i] : 0.0);
    nonzero += sol.policy[i] > 0.0;
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_LE(cost, c + 1e-12);
  EXPECT_LE(nonzero, 2);
}

TEST(BaseRewardTest, MixesOverBudgetArmWithCheapArm) {
  // (c - rho_low) / (rho_high - rho_low) = 0.2 / 0.5
  const auto mix = base_reward({0.8, 0.8}, {0.45, 0.3}, 0.5);
  ASSERT_TRUE(mix);
  EXPECT_NEAR(mix->fraction_first, 0.4, 1e-15);
  EXPECT_NEAR(mix->value, 0.59, 1e-15);
  // Argument order does not matter.
  const auto swapped = base_reward({0.45, 0.3}, {0.8, 0.8}, 0.5);
  EXPECT_NEAR(swapped->fraction_first, 0.6, 1e-15);
  EXPECT_NEAR(swapped->value, 0.59, 1e-15);
}

TEST(BaseRewardTest, MixesWithNullArm) {
  const auto mix = base_reward({0.7, 0.75}, {0.0, 0.0}, 0.5);
  ASSERT_TRUE(mix);
  EXPECT_NEAR(mix->fraction_first, 2.0 / 3.0, 1e-15);  // c / rho
  EXPECT_NEAR(mix->value, 0.7 * 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(mix->value, 0.4667, 5e-5);
}

TEST(BaseRewardTest, UnderBudgetArmAlone) {
  const auto mix = base_reward({0.9, 0.4}, {0.0, 0.0}, 0.5);
  ASSERT_TRUE(mix);
  EXPECT_EQ(mix->fraction_first, 1.0);
  EXPECT_EQ(mix->value, 0.9);
}

TEST(BaseRewardTest, CheapArmWithHigherRewardTakesAllMass) {
  const auto mix = base_reward({0.5, 0.9}, {0.6, 0.2}, 0.5);
  ASSERT_TRUE(mix);
  EXPECT_EQ(mix->fraction_first, 0.0);
  EXPECT_EQ(mix->value, 0.6);
}

TEST(BaseRewardTest, BothOverBudgetIsInfeasible) {
  EXPECT_FALSE(base_reward({0.9, 0.6}, {0.8, 0.7}, 0.5));
}

TEST(SolveOptLpTest, FourArmInstance) {
  const LpSolution sol = solve_opt_lp(kMu4, kRho4, 0.5);
  EXPECT_NEAR(sol.value, 0.59, 1e-12);
  EXPECT_NEAR(sol.value, testing::vertex_enumeration(kMu4, kRho4, 0.5), 1e-12);
  EXPECT_EQ(sol.base.high, 2u);
  EXPECT_EQ(sol.base.low, 0u);
  EXPECT_NEAR(sol.policy[0], 0.6, 1e-12);
  EXPECT_NEAR(sol.policy[2], 0.4, 1e-12);
  ExpectValidSolution(sol, kRho4, 0.5);
}

TEST(SolveOptLpTest, NineArmInstance) {
  const LpSolution sol = solve_opt_lp(kMu9, kRho9, 0.5);
  EXPECT_NEAR(sol.value, 0.65, 1e-12);
  EXPECT_NEAR(sol.value, testing::vertex_enumeration(kMu9, kRho9, 0.5), 1e-12);
  EXPECT_EQ(sol.base.high, 5u);
  EXPECT_EQ(sol.base.low, 1u);
  EXPECT_NEAR(sol.policy[1], 5.0 / 9.0, 1e-12);
  EXPECT_NEAR(sol.policy[5], 4.0 / 9.0, 1e-12);
  ExpectValidSolution(sol, kRho9, 0.5);
}

TEST(SolveOptLpTest, SingleCheapArm) {
  const LpSolution sol = solve_opt_lp(std::vector<double>{0.9}, std::vector<double>{0.4}, 0.5);
  EXPECT_EQ(sol.value, 0.9);
  EXPECT_EQ(sol.policy[0], 1.0);
  EXPECT_FALSE(sol.base.is_pair());
}

TEST(SolveOptLpTest, BestRatioArmWithNullWhenEverythingIsExpensive) {
  // Every arm costs more than c: the optimum mixes the best reward-per-cost arm
  // with the null arm, pi = c / rho.
  const std::vector<double> mu{0.7, 0.9};
  const std::vector<double> rho{0.75, 0.95};
  const LpSolution sol = solve_opt_lp(mu, rho, 0.5);
  EXPECT_EQ(sol.base.high, 1u);
  EXPECT_EQ(sol.base.low, 2u);
  EXPECT_NEAR(sol.policy[1], 0.5 / 0.95, 1e-15);
  EXPECT_NEAR(sol.value, 0.5 * 0.9 / 0.95, 1e-15);
}

TEST(SolveOptLpTest, TiesBrokenByLowestIndex) {
  const std::vector<double> mu{0.6, 0.6, 0.6};
  const std::vector<double> rho{0.2, 0.1, 0.3};
  const LpSolution sol = solve_opt_lp(mu, rho, 0.5);
  EXPECT_EQ(sol.base.high, 0u);
  EXPECT_FALSE(sol.base.low);
}

TEST(SolveOptLpTest, EmptyOrMismatchedInputThrows) {
  EXPECT_THROW(solve_opt_lp(std::vector<double>{}, std::vector<double>{}, 0.5),
               std::invalid_argument);
  EXPECT_THROW(solve_opt_lp(std::vector<double>{0.5}, std::vector<double>{0.5, 0.2}, 0.5),
               std::invalid_argument);
}

TEST(SolveOptLpTest, MatchesIndependentSolversOnRandomInstances) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> arms(1, 6);
  std::uniform_int_distribution<int> budget(2, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = arms(rng);
    std::vector<double> mu(k), rho(k);
    for (int i = 0; i < k; ++i) {
      mu[i] = unit(rng);
      rho[i] = unit(rng);
    }
    const double c = budget(rng) / 10.0;
    const LpSolution sol = solve_opt_lp(mu, rho, c);
    ExpectValidSolution(sol, rho, c);
    EXPECT_NEAR(sol.value, testing::vertex_enumeration(mu, rho, c), 1e-12);
    EXPECT_NEAR(sol.value, testing::grid_sweep(mu, rho, c, 1e-3), 1e-3);
    EXPECT_LE(testing::random_policy_lower_bound(mu, rho, c, rng, 200), sol.value + 1e-12);
  }
}

TEST(SolveOptLpTest, ValueIsMonotoneInBudget) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> mu(5), rho(5);
    for (int i = 0; i < 5; ++i) {
      mu[i] = unit(rng);
      rho[i] = unit(rng);
    }
    double prev = -1.0;
    for (int step = 1; step <= 100; ++step) {
      const double value = solve_opt_lp(mu, rho, step / 100.0).value;
      EXPECT_GE(value, prev - 1e-15);
      prev = value;
    }
  }
}

TEST(ComputeGapsTest, FourArmInstance) {
  InstanceConfig inst;
  inst.c = 0.5;
  for (std::size_t i = 0; i < kMu4.size(); ++i) inst.arms.push_back({kMu4[i], kRho4[i]});
  const GapReport report = compute_gaps(inst);

  ASSERT_EQ(report.arm_cost_gap.size(), 3u);
  EXPECT_NEAR(report.arm_cost_gap[0], 0.2, 1e-15);
  EXPECT_NEAR(report.arm_cost_gap[1], 0.25, 1e-15);
  EXPECT_NEAR(report.arm_cost_gap[2], 0.3, 1e-15);
  EXPECT_NEAR(report.min_cost_gap, 0.2, 1e-15);
  EXPECT_NEAR(report.arm_reward_gap[0], 0.35, 1e-15);
  EXPECT_NEAR(report.arm_reward_gap[2], 0.0, 1e-15);

  const BaseGap* optimal = nullptr;
  const BaseGap* arm2_arm1 = nullptr;
  for (const auto& bg : report.base_gaps) {
    EXPECT_GE(bg.gap, 0.0);
    // No valid base has two over-budget members.
    const bool high_over = bg.base.high && *bg.base.high < 3 && kRho4[*bg.base.high] > 0.5;
    const bool low_over = bg.base.low && *bg.base.low < 3 && kRho4[*bg.base.low] > 0.5;
    EXPECT_FALSE(high_over && low_over);
    if (bg.base == report.optimum.base) optimal = &bg;
    if (bg.base == Base{1, 0}) arm2_arm1 = &bg;
  }
  ASSERT_NE(optimal, nullptr);
  EXPECT_EQ(optimal->gap, 0.0);
  ASSERT_NE(arm2_arm1, nullptr);
  // r_(2,1) = 0.7 * 4/9 + 0.45 * 5/9 = 0.56111...
  EXPECT_NEAR(arm2_arm1->reward, 0.7 * 4.0 / 9.0 + 0.45 * 5.0 / 9.0, 1e-12);
  EXPECT_NEAR(arm2_arm1->gap, 0.59 - 0.5611111111111111, 1e-12);
  EXPECT_NEAR(arm2_arm1->gap, 0.0289, 1e-4);

  for (std::size_t i = 0; i < 3; ++i) EXPECT_GE(report.min_base_gap[i], 0.0);
  EXPECT_NEAR(report.min_base_gap[1], arm2_arm1->gap, 1e-12);
}

TEST(RegretReferenceTest, Arithmetic) {
  EXPECT_NEAR(regret_reference(0.59, 100, 59.0), 0.0, 1e-12);
  EXPECT_NEAR(regret_reference(0.59, 100, 50.0), 9.0, 1e-12);
  EXPECT_EQ(regret_reference(0.65, 0, 0.0), 0.0);
}

}  // namespace
}  // namespace bwak
