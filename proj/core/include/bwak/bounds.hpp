#pragma once

#include <cstdint>
#include <span>

#include "bwak/env.hpp"

namespace bwak {

/// Running pull count and reward/cost sums of one arm.
struct ArmStats {
  std::uint64_t pulls = 0;
  double sum_reward = 0.0;
  double sum_cost = 0.0;

  void record(const Outcome& outcome) {
    ++pulls;
    sum_reward += outcome.reward;
    sum_cost += outcome.cost;
  }
  double mean_reward() const { return pulls ? sum_reward / static_cast<double>(pulls) : 0.0; }
  double mean_cost() const { return pulls ? sum_cost / static_cast<double>(pulls) : 0.0; }
};

/// Confidence bounds of one arm at one round. The standard bounds are
/// projected onto [0, 1]; the wide cost bounds are not, since they are only
/// ever compared against c.
struct BoundSet {
  double mu_mean = 0.0;
  double rho_mean = 0.0;
  double mu_ucb = 0.0;
  double mu_lcb = 0.0;
  double rho_ucb = 0.0;
  double rho_lcb = 0.0;
  double wide_rho_lcb = 0.0;
  double wide_rho_ucb = 0.0;

  /// True while the wide cost interval still contains c.
  bool straddles(double c) const { return wide_rho_lcb <= c && c <= wide_rho_ucb; }
};

/// Natural log of the round index, clamped at 0 for t <= 1.
double log_round(std::uint64_t t);

/// sqrt(3 ln t / N); +infinity when N == 0.
double epsilon(std::uint64_t pulls, double log_t);

/// sqrt(1.5 ln t / N); +infinity when N == 0. The wide cost bounds use seven
/// times this radius, the cost-gap LCB uses one.
double cost_gap_radius(std::uint64_t pulls, double log_t);

BoundSet bound_set(const ArmStats& stats, double log_t);

/// The null arm is known exactly: every bound is 0.
BoundSet null_bound_set();

/// min_i (|rho_bar_i - c| - sqrt(1.5 ln t / N_i)) over the real arms.
/// Throws std::invalid_argument if some arm has never been pulled.
double delta_min_lcb(std::span<const ArmStats> arms, double c, double log_t);

/// delta / (2 + delta - c). Throws std::logic_error unless delta > 0: callers
/// only evaluate it once no arm straddles c, which forces a positive delta.
double omega(double delta_min_lcb, double c);

}  // namespace bwak
