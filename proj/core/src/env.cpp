#include "bwak/env.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace bwak {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kBeta:
      return "beta";
    case Family::kBernoulli:
      return "bernoulli";
    case Family::kDeterministic:
      return "deterministic";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "beta" || name == "beta-scaled") return Family::kBeta;
  if (name == "bernoulli") return Family::kBernoulli;
  if (name == "deterministic") return Family::kDeterministic;
  throw std::invalid_argument("unknown distribution family '" + std::string(name) + "'");
}

std::vector<double> InstanceConfig::mu() const {
  std::vector<double> out;
  out.reserve(arms.size());
  for (const auto& arm : arms) out.push_back(arm.mu);
  return out;
}

std::vector<double> InstanceConfig::rho() const {
  std::vector<double> out;
  out.reserve(arms.size());
  for (const auto& arm : arms) out.push_back(arm.rho);
  return out;
}

double InstanceConfig::min_cost_gap() const {
  double gap = std::numeric_limits<double>::infinity();
  for (const auto& arm : arms) gap = std::min(gap, std::fabs(arm.rho - c));
  return gap;
}

void validate(const InstanceConfig& instance) {
  if (instance.arms.empty()) throw InvalidInstance("instance needs at least one arm");
  if (!(instance.c > 0.0 && instance.c <= 1.0)) {
    std::ostringstream msg;
    msg << "cost budget c=" << instance.c << " must lie in (0, 1]";
    throw InvalidInstance(msg.str());
  }
  for (std::size_t i = 0; i < instance.arms.size(); ++i) {
    const auto& arm = instance.arms[i];
    if (!(arm.mu >= 0.0 && arm.mu <= 1.0) || !(arm.rho >= 0.0 && arm.rho <= 1.0)) {
      std::ostringstream msg;
      msg << "arm " << i + 1 << ": mu=" << arm.mu << ", rho=" << arm.rho
          << " must lie in [0, 1]";
      throw InvalidInstance(msg.str());
    }
  }
  if (!(instance.min_cost_gap() > 0.0)) {
    throw InvalidInstance("minimum cost gap min_i |rho_i - c| must be > 0");
  }
}

Environment::BetaSampler::BetaSampler(double m)
    : mean(m),
      degenerate(m <= 0.0 || m >= 1.0),
      a(degenerate ? 1.0 : 10.0 * m, 1.0),
      b(degenerate ? 1.0 : 10.0 * (1.0 - m), 1.0) {}

double Environment::BetaSampler::operator()(Engine& engine) {
  if (degenerate) return mean;
  const double x = a(engine);
  const double y = b(engine);
  const double sum = x + y;
  // Both shapes are positive, so sum == 0 only on underflow of both draws.
  if (!(sum > 0.0)) return mean;
  return std::clamp(x / sum, 0.0, 1.0);
}

Environment::Environment(InstanceConfig instance, std::uint64_t seed)
    : instance_(std::move(instance)), engine_(seed) {
  reward_samplers_.reserve(instance_.arms.size());
  cost_samplers_.reserve(instance_.arms.size());
  for (const auto& arm : instance_.arms) {
    reward_samplers_.emplace_back(arm.mu);
    cost_samplers_.emplace_back(arm.rho);
  }
}

double Environment::draw(double mean, BetaSampler& beta) {
  switch (instance_.family) {
    case Family::kDeterministic:
      return mean;
    case Family::kBernoulli:
      return uniform01(engine_) < mean ? 1.0 : 0.0;
    case Family::kBeta:
      return beta(engine_);
  }
  return mean;
}

Outcome Environment::sample(ArmIndex arm) {
  const std::size_t k = instance_.arms.size();
  if (arm == k) return {};
  if (arm > k) {
    throw std::out_of_range("arm index " + std::to_string(arm + 1) + " outside 1.." +
                            std::to_string(k + 1));
  }
  Outcome out;
  out.reward = draw(instance_.arms[arm].mu, reward_samplers_[arm]);
  out.cost = draw(instance_.arms[arm].rho, cost_samplers_[arm]);
  return out;
}

}  // namespace bwak
