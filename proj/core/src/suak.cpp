#include "bwak/suak.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bwak {

double mixing_probability(double budget, double rho_high, double rho_low, double omega) {
  const double lo = omega;
  const double hi = 1.0 - omega;
  if (!(rho_high > rho_low)) {
    // 0/0 fraction: fall back to the end branch b lands in.
    return budget >= rho_high ? hi : lo;
  }
  if (budget > rho_high) return hi;
  if (budget < rho_low) return lo;
  const double raw = (budget - rho_low) / (rho_high - rho_low);
  return std::min(std::max(raw, lo), hi);
}

SuakPolicy::SuakPolicy(std::size_t num_arms, double c, std::uint64_t seed)
    : SuakPolicy(
          [num_arms] {
            SuakState s;
            s.arms.resize(num_arms);
            return s;
          }(),
          c, seed) {}

SuakPolicy::SuakPolicy(SuakState state, double c, std::uint64_t seed)
    : state_(std::move(state)), c_(c), engine_(seed), moments_(state_.arms.size() + 1) {
  if (state_.arms.empty()) throw std::invalid_argument("SuakPolicy needs at least one arm");
  if (!(c > 0.0 && c <= 1.0)) throw std::invalid_argument("SuakPolicy: c must lie in (0, 1]");
  if (state_.t == 0) throw std::invalid_argument("SuakPolicy: rounds are 1-based");
}

Action SuakPolicy::act() {
  if (pending_) throw std::logic_error("SuakPolicy::act called twice without update");

  const std::uint64_t t = state_.t;
  const double ct = c_ * static_cast<double>(t);
  const double log_t = log_round(t);
  const double spent = state_.spent.value();
  const std::size_t k = state_.arms.size();
  trace_ = DecisionTrace{};

  std::optional<ArmIndex> straddling;
  for (ArmIndex i = 0; i < k; ++i) {
    const BoundSet b = bound_set(state_.arms[i], log_t);
    moments_[i] = {b.mu_ucb, b.rho_lcb};
    if (b.straddles(c_) &&
        (!straddling || state_.arms[i].pulls < state_.arms[*straddling].pulls)) {
      straddling = i;
    }
  }
  moments_[k] = {0.0, 0.0};

  if (straddling) {
    if (state_.gated_spent.value() + 1.0 > c_ * static_cast<double>(state_.gated_rounds)) {
      trace_.branch = Branch::kGatedSkip;
      return *(pending_ = Action::skip(SkipReason::kPhaseGuard, null_arm()));
    }
    if (state_.phase == Phase::kMain && spent + 1.0 > ct) {
      trace_.branch = Branch::kAnytimeSkip;
      return *(pending_ = Action::skip(SkipReason::kAnytimeGuard, null_arm()));
    }
    trace_.branch = Branch::kGatedPull;
    return *(pending_ = Action::pull(*straddling));
  }

  if (spent + 1.0 > ct) {
    trace_.branch = Branch::kAnytimeSkip;
    return *(pending_ = Action::skip(SkipReason::kAnytimeGuard, null_arm()));
  }

  const double delta = delta_min_lcb(state_.arms, c_, log_t);
  if (!(delta > 0.0)) {
    std::ostringstream msg;
    msg << "round " << t << ": cost-gap LCB " << delta << " <= 0 with no straddling arm";
    throw std::logic_error(msg.str());
  }
  const double w = omega(delta, c_);
  if (!(w > 0.0 && w <= 0.5) || w < delta / 3.0 || w > delta) {
    std::ostringstream msg;
    msg << "round " << t << ": omega " << w << " outside [" << delta / 3.0 << ", "
        << std::min(delta, 0.5) << "]";
    throw std::logic_error(msg.str());
  }
  trace_.delta_min_lcb = delta;
  trace_.omega = w;

  const LpSolution lp = solve_base_lp(moments_, c_);
  if (!lp.base.is_pair()) {
    trace_.branch = Branch::kSingleton;
    trace_.base = lp.base;
    return *(pending_ = Action::pull(*lp.base.high));
  }

  auto empirical_cost = [&](ArmIndex arm) {
    return arm < k ? state_.arms[arm].mean_cost() : 0.0;
  };
  ArmIndex j = *lp.base.high;
  ArmIndex low = *lp.base.low;
  if (empirical_cost(low) > empirical_cost(j)) std::swap(j, low);
  const double rho_j = empirical_cost(j);
  const double rho_k = empirical_cost(low);

  const double b = ct - spent - log_t / (w * w);
  const double p = mixing_probability(b, rho_j, rho_k, w);
  if (!(p >= w && p <= 1.0 - w)) {
    std::ostringstream msg;
    msg << "round " << t << ": mixing probability " << p << " outside [" << w << ", " << 1.0 - w
        << "]";
    throw std::logic_error(msg.str());
  }
  trace_.branch = Branch::kMixture;
  trace_.base = Base{j, low};
  trace_.budget = b;
  trace_.probability = p;
  const ArmIndex chosen = uniform01(engine_) < p ? j : low;
  return *(pending_ = Action::pull(chosen));
}

void SuakPolicy::update(const Action& action, const Outcome& outcome) {
  if (!pending_) throw std::logic_error("SuakPolicy::update called without a preceding act");
  if (!(action == *pending_)) {
    throw std::logic_error("SuakPolicy::update: action differs from the one returned by act");
  }
  pending_.reset();

  if (action.kind == Action::Kind::kPull) {
    if (action.arm < state_.arms.size()) state_.arms[action.arm].record(outcome);
    state_.spent.add(outcome.cost);
  }
  switch (trace_.branch) {
    case Branch::kGatedPull:
      state_.gated_spent.add(outcome.cost);
      ++state_.gated_rounds;
      break;
    case Branch::kGatedSkip:
      ++state_.gated_rounds;
      break;
    case Branch::kSingleton:
    case Branch::kMixture:
      state_.phase = Phase::kMain;
      break;
    case Branch::kAnytimeSkip:
      // Only reachable from the main phase or from the first round in which
      // no arm straddles c.
      state_.phase = Phase::kMain;
      break;
    case Branch::kInitPull:
      break;
  }
  ++state_.t;
}

}  // namespace bwak
