#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bwak/env.hpp"

namespace bwak {

enum class PolicyKind { kSuak, kOps };

std::string_view to_string(PolicyKind kind);
/// Throws std::invalid_argument on unknown names.
PolicyKind parse_policy(std::string_view name);

/// Malformed or invalid experiment configuration. The message carries the
/// source name and line when known.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  InstanceConfig instance;
  std::vector<PolicyKind> policies{PolicyKind::kSuak, PolicyKind::kOps};
  std::uint64_t horizon = 10000;
  std::uint64_t trials = 1;
  /// Checkpoint stride; 0 selects max(1, T / 500).
  std::uint64_t stride = 0;
  std::string out_dir = "results";
  bool write_traces = false;

  std::uint64_t effective_stride() const;
};

/// Key-value format, one `key = value` per line, `#` starts a comment:
///
///   mu       = 0.45, 0.7, 0.8
///   rho      = 0.3, 0.75, 0.8
///   c        = 0.5
///   family   = beta            # beta | bernoulli | deterministic
///   seed     = 42
///   policies = suak, ops
///   T        = 500000
///   trials   = 10
///   stride   = 1000
///   out      = results
///   trace    = false
///
/// mu, rho and c are required. Throws ConfigError.
ExperimentConfig parse_config(std::string_view text, std::string_view source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Applies one `key=value` assignment using the same rules as the file format.
void apply_override(ExperimentConfig& config, std::string_view assignment);

/// Checks the cross-field invariants (policies nonempty, T >= 1, trials >= 1,
/// a valid instance). Throws ConfigError.
void validate(const ExperimentConfig& config);

/// Writes the config back in the file format; parse_config inverts it.
std::string serialize_config(const ExperimentConfig& config);

}  // namespace bwak
