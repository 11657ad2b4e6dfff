#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bwak/bounds.hpp"
#include "bwak/numeric.hpp"
#include "bwak/policy.hpp"
#include "bwak/rng.hpp"

namespace bwak {

struct SuakState {
  std::vector<ArmStats> arms;  // real arms only
  CompensatedSum spent;        // S_c: all incurred cost
  CompensatedSum gated_spent;  // S_p: cost of gated pulls
  /// N_p: gated rounds, i.e. gated pulls plus phase-guard skips. Counting the
  /// skips lets the gated ledger earn budget; counting pulls alone would leave
  /// S_p + 1 > c * 0 true forever.
  std::uint64_t gated_rounds = 0;
  std::uint64_t t = 1;  // round about to be played
  Phase phase = Phase::kInit;
};

/// Probability of pulling the higher-cost arm j of a mixed base given the
/// available budget b. The result always lies in [omega, 1 - omega].
double mixing_probability(double budget, double rho_high, double rho_low, double omega);

/// Strategic under-utilization policy for anytime knapsacks.
///
/// Each round, in order:
///  1. If some arm's wide cost interval straddles c, either skip (phase guard,
///     S_p + 1 > c N_p), skip (anytime guard, main phase only) or pull the
///     least-pulled straddling arm.
///  2. Otherwise skip if S_c + 1 > c t.
///  3. Otherwise solve the optimistic LP on (mu_ucb, rho_lcb), and mix the two
///     support arms with probability p(t) clipped to [omega, 1 - omega], where
///     the target budget b(t) = c t - S_c - ln t / omega^2 under-spends.
class SuakPolicy final : public Policy {
 public:
  SuakPolicy(std::size_t num_arms, double c, std::uint64_t seed);
  SuakPolicy(SuakState state, double c, std::uint64_t seed);

  Action act() override;
  void update(const Action& action, const Outcome& outcome) override;
  const DecisionTrace& last_trace() const override { return trace_; }
  std::string_view name() const override { return "suak"; }

  const SuakState& state() const { return state_; }
  double budget() const { return c_; }

 private:
  ArmIndex null_arm() const { return state_.arms.size(); }

  SuakState state_;
  double c_;
  Engine engine_;
  DecisionTrace trace_;
  std::optional<Action> pending_;
  std::vector<ArmMoments> moments_;
};

}  // namespace bwak
