#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bwak/env.hpp"

namespace bwak {

/// Mean reward and cost of one arm as seen by an LP. The null arm is {0, 0}.
struct ArmMoments {
  double mu = 0.0;
  double rho = 0.0;
};

/// A support set of at most two arms. `high` is the higher-cost member (or the
/// only member of a singleton); `low` is empty for singletons.
struct Base {
  std::optional<ArmIndex> high;
  std::optional<ArmIndex> low;

  bool empty() const { return !high.has_value(); }
  bool is_pair() const { return high.has_value() && low.has_value(); }
  bool contains(ArmIndex arm) const { return high == arm || low == arm; }

  friend bool operator==(const Base&, const Base&) = default;
};

/// Optimal mixture of a two-arm base: `fraction_first` is the probability
/// placed on the first argument.
struct Mixture {
  double fraction_first = 1.0;
  double value = 0.0;
};

/// Exact maximum of  max fa*mu_a + (1-f)*mu_b  s.t.  f*rho_a + (1-f)*rho_b <= c,
/// f in [0, 1]. Returns nullopt when both costs exceed c (infeasible base).
std::optional<Mixture> base_reward(ArmMoments first, ArmMoments second, double c);

struct LpSolution {
  /// Probability vector over K+1 arms; the last entry is the null arm.
  std::vector<double> policy;
  Base base;
  double value = 0.0;
};

/// Maximizes <mu, pi> over pi in the (K+1)-simplex subject to <rho, pi> <= c by
/// enumerating every valid base. The null arm is appended internally, so both
/// spans have length K. Exact value ties go to the lexicographically smallest
/// (high, low) index pair, with an empty `low` ranking last. Throws
/// std::invalid_argument for empty or mismatched inputs.
LpSolution solve_opt_lp(std::span<const double> mu, std::span<const double> rho, double c);

/// Same solver over a caller-provided moment table; `moments` already includes
/// the null arm as its last entry. Used on the hot path of the policies.
LpSolution solve_base_lp(std::span<const ArmMoments> moments, double c);

struct BaseGap {
  Base base;
  double reward = 0.0;  // r_I
  double gap = 0.0;     // r* - r_I
};

/// Reward and cost gap diagnostics. Per-arm vectors cover the K real arms.
struct GapReport {
  LpSolution optimum;
  std::vector<double> arm_reward_gap;  // mu_{i**} - mu_i
  std::vector<double> arm_cost_gap;    // |rho_i - c|
  double min_cost_gap = 0.0;
  std::vector<BaseGap> base_gaps;      // every valid base over K+1 arms
  /// Minimum gap over valid bases containing arm i other than the optimal
  /// base; +infinity when no such base exists.
  std::vector<double> min_base_gap;
};

GapReport compute_gaps(const InstanceConfig& instance);

/// T * r* - cumulative reward.
double regret_reference(double optimal_value, std::uint64_t horizon, double cumulative_reward);

}  // namespace bwak
