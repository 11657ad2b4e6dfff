#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bwak/config.hpp"
#include "bwak/env.hpp"
#include "bwak/oracle.hpp"
#include "bwak/policy.hpp"

namespace bwak {

/// Tolerance of the per-round audit S_c(t) <= c t.
inline constexpr double kConstraintTolerance = 1e-9;

std::unique_ptr<Policy> make_policy(PolicyKind kind, const InstanceConfig& instance,
                                    std::uint64_t horizon, std::uint64_t seed);

struct RoundRecord {
  std::uint64_t t = 0;
  Action action;
  double reward = 0.0;
  double cost = 0.0;
  double cum_reward = 0.0;
  double cum_cost = 0.0;
  double inst_regret = 0.0;  // r* - reward
};

struct Checkpoint {
  std::uint64_t t = 0;
  double regret = 0.0;     // t r* - cumulative reward
  std::uint64_t skips = 0;
  double cost_gap = 0.0;   // c - S_c(t) / t
};

struct TrialSummary {
  PolicyKind policy = PolicyKind::kSuak;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t horizon = 0;
  double cumulative_reward = 0.0;
  double cumulative_cost = 0.0;
  double regret = 0.0;
  std::uint64_t phase_guard_skips = 0;
  std::uint64_t anytime_guard_skips = 0;
  double final_cost_gap = 0.0;
  /// max_t (S_c(t) - c t); never above kConstraintTolerance in a completed trial.
  double max_constraint_excess = 0.0;
  /// Smallest c - S_c(t)/t seen over the run.
  double min_cost_gap = 0.0;
  std::uint64_t omega_evaluations = 0;
  std::uint64_t omega_bracket_violations = 0;
  std::vector<Checkpoint> checkpoints;

  std::uint64_t skips() const { return phase_guard_skips + anytime_guard_skips; }
};

/// Raised when S_c(t) > c t + tolerance. Always an implementation defect.
class ConstraintViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RoundObserver = std::function<void(const RoundRecord&, const DecisionTrace&)>;

struct TrialOptions {
  /// Checkpoint stride; 0 selects max(1, T / 500). The horizon is always
  /// checkpointed.
  std::uint64_t stride = 0;
  RoundObserver observer;
};

/// Plays `horizon` rounds of `kind` against a freshly seeded environment. The
/// trial seed is trial_seed(instance.seed, trial); the environment and the
/// policy draw from separate streams of it. Throws ConstraintViolation with
/// the recent trace on an audit failure.
TrialSummary run_trial(PolicyKind kind, const InstanceConfig& instance, std::uint64_t horizon,
                       std::uint64_t trial, const TrialOptions& options = {});

/// Drives an existing policy; run_trial builds the policy and delegates here.
/// `summary.policy` is set to `kind`.
TrialSummary run_policy(Policy& policy, PolicyKind kind, const InstanceConfig& instance,
                        std::uint64_t horizon, std::uint64_t trial,
                        const TrialOptions& options = {});

struct SeriesPoint {
  std::uint64_t t = 0;
  double regret_mean = 0.0;
  double regret_std = 0.0;
  double skips_mean = 0.0;
  double skips_std = 0.0;
  double costgap_mean = 0.0;
  double costgap_std = 0.0;
};

/// Mean and sample standard deviation across trials at each checkpoint.
struct AggregateReport {
  PolicyKind policy = PolicyKind::kSuak;
  std::vector<SeriesPoint> series;
  std::vector<TrialSummary> trials;

  const SeriesPoint* at(std::uint64_t t) const;
};

/// Reduces trial summaries (all of one policy, identical checkpoints) in order.
AggregateReport aggregate(PolicyKind policy, std::vector<TrialSummary> trials);

struct ExperimentResult {
  GapReport oracle;
  std::vector<AggregateReport> reports;  // config.policies order
};

/// Runs every (policy, trial) pair on up to `threads` workers; the result does
/// not depend on the thread count. With `trace_dir` set, each trial writes its
/// round-by-round CSV there.
ExperimentResult run_experiment(const ExperimentConfig& config, unsigned threads = 1,
                                const std::optional<std::filesystem::path>& trace_dir = {});

}  // namespace bwak
