#include "bwak/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bwak {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWideFactor = 7.0;

double project01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

double log_round(std::uint64_t t) { return t > 1 ? std::log(static_cast<double>(t)) : 0.0; }

double epsilon(std::uint64_t pulls, double log_t) {
  if (pulls == 0) return kInf;
  return std::sqrt(3.0 * log_t / static_cast<double>(pulls));
}

double cost_gap_radius(std::uint64_t pulls, double log_t) {
  if (pulls == 0) return kInf;
  return std::sqrt(1.5 * log_t / static_cast<double>(pulls));
}

BoundSet bound_set(const ArmStats& stats, double log_t) {
  BoundSet b;
  b.mu_mean = stats.mean_reward();
  b.rho_mean = stats.mean_cost();
  if (stats.pulls == 0) {
    b.mu_ucb = b.rho_ucb = 1.0;
    b.mu_lcb = b.rho_lcb = 0.0;
    b.wide_rho_lcb = -kInf;
    b.wide_rho_ucb = kInf;
    return b;
  }
  const double eps = epsilon(stats.pulls, log_t);
  const double wide = kWideFactor * cost_gap_radius(stats.pulls, log_t);
  b.mu_ucb = project01(b.mu_mean + eps);
  b.mu_lcb = project01(b.mu_mean - eps);
  b.rho_ucb = project01(b.rho_mean + eps);
  b.rho_lcb = project01(b.rho_mean - eps);
  b.wide_rho_lcb = b.rho_mean - wide;
  b.wide_rho_ucb = b.rho_mean + wide;
  return b;
}

BoundSet null_bound_set() { return BoundSet{}; }

double delta_min_lcb(std::span<const ArmStats> arms, double c, double log_t) {
  if (arms.empty()) throw std::invalid_argument("delta_min_lcb: no arms");
  double best = kInf;
  for (std::size_t i = 0; i < arms.size(); ++i) {
    if (arms[i].pulls == 0) {
      throw std::invalid_argument("delta_min_lcb: arm " + std::to_string(i + 1) +
                                  " has never been pulled");
    }
    const double gap = std::fabs(arms[i].mean_cost() - c) - cost_gap_radius(arms[i].pulls, log_t);
    best = std::min(best, gap);
  }
  return best;
}

double omega(double delta_min_lcb, double c) {
  if (!(delta_min_lcb > 0.0)) {
    std::ostringstream msg;
    msg << "omega evaluated with non-positive cost-gap LCB " << delta_min_lcb;
    throw std::logic_error(msg.str());
  }
  return delta_min_lcb / (2.0 + delta_min_lcb - c);
}

}  // namespace bwak
