#include "bwak/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace bwak {

std::optional<Mixture> base_reward(ArmMoments first, ArmMoments second, double c) {
  const bool first_ok = first.rho <= c;
  const bool second_ok = second.rho <= c;
  if (!first_ok && !second_ok) return std::nullopt;
  if (first_ok && second_ok) {
    if (first.mu >= second.mu) return Mixture{1.0, first.mu};
    return Mixture{0.0, second.mu};
  }
  // Exactly one member is over budget: the constraint binds at equality unless
  // the cheap arm also has the higher reward.
  const bool first_high = !first_ok;
  const ArmMoments& high = first_high ? first : second;
  const ArmMoments& low = first_high ? second : first;
  double on_high = 0.0;
  double value = low.mu;
  if (high.mu > low.mu) {
    on_high = (c - low.rho) / (high.rho - low.rho);
    value = high.mu * on_high + low.mu * (1.0 - on_high);
  }
  return Mixture{first_high ? on_high : 1.0 - on_high, value};
}

namespace {

struct Candidate {
  ArmIndex high;
  ArmIndex low;  // == sentinel for singletons
  double on_high;
  double value;
};

}  // namespace

LpSolution solve_base_lp(std::span<const ArmMoments> moments, double c) {
  if (moments.empty()) throw std::invalid_argument("LP needs at least the null arm");
  const std::size_t n = moments.size();
  const ArmIndex sentinel = n;

  std::optional<Candidate> best;
  auto consider = [&](const Candidate& cand) {
    if (!best || cand.value > best->value ||
        (cand.value == best->value &&
         std::tie(cand.high, cand.low) < std::tie(best->high, best->low))) {
      best = cand;
    }
  };

  for (ArmIndex i = 0; i < n; ++i) {
    if (moments[i].rho <= c) consider({i, sentinel, 1.0, moments[i].mu});
  }
  // Mixtures worth more than a singleton pair an over-budget arm with a cheaper
  // arm of strictly lower reward; every other pair collapses to a singleton.
  for (ArmIndex h = 0; h < n; ++h) {
    if (!(moments[h].rho > c)) continue;
    for (ArmIndex l = 0; l < n; ++l) {
      if (!(moments[l].rho <= c) || !(moments[h].mu > moments[l].mu)) continue;
      const auto mix = base_reward(moments[h], moments[l], c);
      consider({h, l, mix->fraction_first, mix->value});
    }
  }

  LpSolution out;
  out.policy.assign(n, 0.0);
  // The null arm is always feasible, so a candidate exists.
  out.base.high = best->high;
  out.value = best->value;
  if (best->low == sentinel) {
    out.policy[best->high] = 1.0;
  } else {
    out.base.low = best->low;
    out.policy[best->high] = best->on_high;
    out.policy[best->low] = 1.0 - best->on_high;
  }
  return out;
}

LpSolution solve_opt_lp(std::span<const double> mu, std::span<const double> rho, double c) {
  if (mu.empty()) throw std::invalid_argument("solve_opt_lp: empty arm list");
  if (mu.size() != rho.size()) {
    throw std::invalid_argument("solve_opt_lp: mu and rho lengths differ");
  }
  std::vector<ArmMoments> moments(mu.size() + 1);
  for (std::size_t i = 0; i < mu.size(); ++i) moments[i] = {mu[i], rho[i]};
  return solve_base_lp(moments, c);
}

GapReport compute_gaps(const InstanceConfig& instance) {
  validate(instance);
  const std::size_t k = instance.num_arms();
  const double c = instance.c;
  std::vector<ArmMoments> moments(k + 1);
  for (std::size_t i = 0; i < k; ++i) moments[i] = {instance.arms[i].mu, instance.arms[i].rho};

  GapReport report;
  report.optimum = solve_base_lp(moments, c);
  const double r_star = report.optimum.value;

  double best_mu = 0.0;
  for (const auto& arm : instance.arms) best_mu = std::max(best_mu, arm.mu);
  for (const auto& arm : instance.arms) {
    report.arm_reward_gap.push_back(best_mu - arm.mu);
    report.arm_cost_gap.push_back(std::fabs(arm.rho - c));
  }
  report.min_cost_gap = *std::min_element(report.arm_cost_gap.begin(), report.arm_cost_gap.end());

  auto add_base = [&](Base base, double reward) {
    report.base_gaps.push_back({base, reward, std::max(0.0, r_star - reward)});
  };
  for (ArmIndex i = 0; i <= k; ++i) {
    if (moments[i].rho <= c) add_base({i, std::nullopt}, moments[i].mu);
  }
  for (ArmIndex i = 0; i <= k; ++i) {
    for (ArmIndex j = i + 1; j <= k; ++j) {
      const auto mix = base_reward(moments[i], moments[j], c);
      if (!mix) continue;
      const bool i_high = moments[i].rho > moments[j].rho ||
                          (moments[i].rho == moments[j].rho && i < j);
      add_base(i_high ? Base{i, j} : Base{j, i}, mix->value);
    }
  }

  report.min_base_gap.assign(k, std::numeric_limits<double>::infinity());
  for (const auto& bg : report.base_gaps) {
    if (bg.base == report.optimum.base) continue;
    for (ArmIndex i = 0; i < k; ++i) {
      if (bg.base.contains(i)) report.min_base_gap[i] = std::min(report.min_base_gap[i], bg.gap);
    }
  }
  return report;
}

double regret_reference(double optimal_value, std::uint64_t horizon, double cumulative_reward) {
  return static_cast<double>(horizon) * optimal_value - cumulative_reward;
}

}  // namespace bwak
