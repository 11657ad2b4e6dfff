#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bwak/rng.hpp"

namespace bwak {

/// Arms are indexed 0..K-1; index K is the null arm (zero reward, zero cost).
using ArmIndex = std::size_t;

enum class Family { kBeta, kBernoulli, kDeterministic };

std::string_view to_string(Family family);
/// Throws std::invalid_argument on unknown names.
Family parse_family(std::string_view name);

struct ArmSpec {
  double mu = 0.0;
  double rho = 0.0;
};

/// Thrown when an instance violates its invariants.
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The simulated world: K real arms, per-round cost budget c, distribution
/// family and master seed. The null arm is implicit.
struct InstanceConfig {
  std::vector<ArmSpec> arms;
  double c = 0.5;
  Family family = Family::kBeta;
  std::uint64_t seed = 0;

  std::size_t num_arms() const { return arms.size(); }
  ArmIndex null_arm() const { return arms.size(); }

  std::vector<double> mu() const;
  std::vector<double> rho() const;

  /// min_i |rho_i - c| over real arms.
  double min_cost_gap() const;
};

/// Checks K >= 1, means in [0,1], c in (0,1] and a strictly positive minimum
/// cost gap. Throws InvalidInstance.
void validate(const InstanceConfig& instance);

struct Outcome {
  double reward = 0.0;
  double cost = 0.0;
};

/// Stochastic K-armed environment plus null arm. Reward and cost of a pull are
/// drawn independently. The beta family uses Beta(10m, 10(1-m)) for a mean m
/// and degenerates to the constant m when m is 0 or 1.
class Environment {
 public:
  Environment(InstanceConfig instance, std::uint64_t seed);

  /// Throws std::out_of_range for arm > K.
  Outcome sample(ArmIndex arm);

  const InstanceConfig& instance() const { return instance_; }

 private:
  struct BetaSampler {
    explicit BetaSampler(double mean);
    double operator()(Engine& engine);

    double mean;
    bool degenerate;
    std::gamma_distribution<double> a;
    std::gamma_distribution<double> b;
  };

  double draw(double mean, BetaSampler& beta);

  InstanceConfig instance_;
  Engine engine_;
  std::vector<BetaSampler> reward_samplers_;
  std::vector<BetaSampler> cost_samplers_;
};

}  // namespace bwak
