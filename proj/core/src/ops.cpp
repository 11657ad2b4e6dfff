#include "bwak/ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace bwak {

std::vector<double> ops_distribution(std::span<const ArmMoments> arms, double remaining_budget,
                                     double remaining_rounds) {
  if (arms.empty()) throw std::invalid_argument("ops_distribution: no arms");
  if (!(remaining_rounds > 0.0)) {
    throw std::invalid_argument("ops_distribution: no rounds remain");
  }
  // Dividing by the remaining rounds turns the count LP into a per-round LP
  // over the simplex whose slack is the null arm.
  std::vector<ArmMoments> moments(arms.begin(), arms.end());
  moments.push_back({0.0, 0.0});
  const LpSolution lp = solve_base_lp(moments, remaining_budget / remaining_rounds);

  std::vector<double> dist(arms.size(), 0.0);
  double mass = 0.0;
  for (ArmIndex i = 0; i < arms.size(); ++i) mass += lp.policy[i];
  if (!(mass > 0.0)) return dist;
  for (ArmIndex i = 0; i < arms.size(); ++i) dist[i] = lp.policy[i] / mass;
  return dist;
}

OpsPolicy::OpsPolicy(std::size_t num_arms, double c, std::uint64_t horizon, std::uint64_t seed)
    : OpsPolicy(OpsState{std::vector<ArmStats>(num_arms), {}, 1, horizon}, c, seed) {}

OpsPolicy::OpsPolicy(OpsState state, double c, std::uint64_t seed)
    : state_(std::move(state)), c_(c), engine_(seed), moments_(state_.arms.size()) {
  if (state_.arms.empty()) throw std::invalid_argument("OpsPolicy needs at least one arm");
  if (!(c > 0.0 && c <= 1.0)) throw std::invalid_argument("OpsPolicy: c must lie in (0, 1]");
  if (state_.horizon < state_.arms.size()) {
    throw std::invalid_argument("OpsPolicy: horizon T=" + std::to_string(state_.horizon) +
                                " is shorter than the initialization sweep over " +
                                std::to_string(state_.arms.size()) + " arms");
  }
}

Action OpsPolicy::act() {
  if (pending_) throw std::logic_error("OpsPolicy::act called twice without update");
  trace_ = DecisionTrace{};
  const std::uint64_t t = state_.t;

  if (state_.spent.value() + 1.0 > c_ * static_cast<double>(t)) {
    trace_.branch = Branch::kAnytimeSkip;
    return *(pending_ = Action::skip(SkipReason::kAnytimeGuard, null_arm()));
  }

  if (state_.phase == Phase::kInit) {
    const auto next = std::find_if(state_.arms.begin(), state_.arms.end(),
                                   [](const ArmStats& s) { return s.pulls == 0; });
    trace_.branch = Branch::kInitPull;
    return *(pending_ = Action::pull(static_cast<ArmIndex>(next - state_.arms.begin())));
  }

  const double log_t = log_round(t);
  for (ArmIndex i = 0; i < state_.arms.size(); ++i) {
    const BoundSet b = bound_set(state_.arms[i], log_t);
    moments_[i] = {b.mu_ucb, b.rho_lcb};
  }
  const double remaining_budget = c_ * static_cast<double>(state_.horizon) - state_.spent.value();
  const double remaining_rounds =
      t <= state_.horizon ? static_cast<double>(state_.horizon - t + 1) : 1.0;
  const std::vector<double> dist = ops_distribution(moments_, remaining_budget, remaining_rounds);

  Base support;
  for (ArmIndex i = 0; i < dist.size(); ++i) {
    if (dist[i] <= 0.0) continue;
    (support.high ? support.low : support.high) = i;
  }
  if (!support.high) {
    trace_.branch = Branch::kSingleton;
    trace_.base = Base{null_arm(), std::nullopt};
    return *(pending_ = Action::pull(null_arm()));
  }
  ArmIndex chosen = *support.high;
  if (support.low) {
    trace_.branch = Branch::kMixture;
    trace_.probability = dist[*support.high];
    trace_.budget = remaining_budget;
    if (!(uniform01(engine_) < dist[*support.high])) chosen = *support.low;
  } else {
    trace_.branch = Branch::kSingleton;
  }
  trace_.base = support;
  return *(pending_ = Action::pull(chosen));
}

void OpsPolicy::update(const Action& action, const Outcome& outcome) {
  if (!pending_) throw std::logic_error("OpsPolicy::update called without a preceding act");
  if (!(action == *pending_)) {
    throw std::logic_error("OpsPolicy::update: action differs from the one returned by act");
  }
  pending_.reset();

  if (action.kind == Action::Kind::kPull) {
    if (action.arm < state_.arms.size()) state_.arms[action.arm].record(outcome);
    state_.spent.add(outcome.cost);
  }
  if (state_.phase == Phase::kInit &&
      std::all_of(state_.arms.begin(), state_.arms.end(),
                  [](const ArmStats& s) { return s.pulls > 0; })) {
    state_.phase = Phase::kMain;
  }
  ++state_.t;
}

}  // namespace bwak
