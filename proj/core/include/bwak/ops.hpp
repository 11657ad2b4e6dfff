#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bwak/bounds.hpp"
#include "bwak/oracle.hpp"
#include "bwak/numeric.hpp"
#include "bwak/policy.hpp"
#include "bwak/rng.hpp"

namespace bwak {

struct OpsState {
  std::vector<ArmStats> arms;
  CompensatedSum spent;  // S_c
  std::uint64_t t = 1;
  std::uint64_t horizon = 0;  // T
  Phase phase = Phase::kInit;
};

/// Pull distribution of the baseline's optimistic LP over remaining resources:
///
///   max <mu_ucb, x>  s.t.  <rho_lcb, x> <= remaining_budget,
///                          sum(x) <= remaining_rounds,  x >= 0,
///
/// normalized over the real arms. `arms` excludes the null arm. The result
/// has K entries summing to 1, or is all zero when the LP puts no mass on a
/// real arm.
std::vector<double> ops_distribution(std::span<const ArmMoments> arms, double remaining_budget,
                                     double remaining_rounds);

/// One-phase-skip baseline: a horizon-aware optimistic LP policy with an
/// anytime skip guard bolted on. Arms are initialized in index order.
class OpsPolicy final : public Policy {
 public:
  /// Throws std::invalid_argument if horizon < num_arms.
  OpsPolicy(std::size_t num_arms, double c, std::uint64_t horizon, std::uint64_t seed);
  OpsPolicy(OpsState state, double c, std::uint64_t seed);

  Action act() override;
  void update(const Action& action, const Outcome& outcome) override;
  const DecisionTrace& last_trace() const override { return trace_; }
  std::string_view name() const override { return "ops"; }

  const OpsState& state() const { return state_; }

 private:
  ArmIndex null_arm() const { return state_.arms.size(); }

  OpsState state_;
  double c_;
  Engine engine_;
  DecisionTrace trace_;
  std::optional<Action> pending_;
  std::vector<ArmMoments> moments_;
};

}  // namespace bwak
