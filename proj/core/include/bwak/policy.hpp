#pragma once

#include <optional>
#include <string_view>

#include "bwak/env.hpp"
#include "bwak/oracle.hpp"

namespace bwak {

enum class SkipReason { kNone, kPhaseGuard, kAnytimeGuard };

std::string_view to_string(SkipReason reason);

/// What a policy does in one round. A skip is a null-arm pull forced by a
/// guard; a pull of the null arm chosen by the LP is a Pull, not a skip.
struct Action {
  enum class Kind { kSkip, kPull };

  Kind kind = Kind::kSkip;
  ArmIndex arm = 0;
  SkipReason reason = SkipReason::kNone;

  static Action skip(SkipReason why, ArmIndex null_arm) { return {Kind::kSkip, null_arm, why}; }
  static Action pull(ArmIndex arm) { return {Kind::kPull, arm, SkipReason::kNone}; }

  bool is_skip() const { return kind == Kind::kSkip; }

  friend bool operator==(const Action&, const Action&) = default;
};

/// Which rule produced an action.
enum class Branch {
  kGatedSkip,    // straddling arm, gated-pull ledger exhausted
  kGatedPull,    // straddling arm pulled to learn its cost side
  kAnytimeSkip,  // S_c + 1 > c t
  kInitPull,     // baseline initialization sweep
  kSingleton,    // LP support is one arm
  kMixture,      // LP support is two arms, randomized
};

std::string_view to_string(Branch branch);

/// Per-round decision record. Optional fields are set only on the branches
/// that compute them.
struct DecisionTrace {
  Branch branch = Branch::kGatedSkip;
  /// LP support, ordered by empirical cost (j = high, k = low).
  Base base;
  std::optional<double> delta_min_lcb;
  std::optional<double> omega;
  std::optional<double> budget;
  std::optional<double> probability;
};

enum class Phase { kInit, kMain };

/// Common driver interface: exactly one update() per act().
class Policy {
 public:
  virtual ~Policy() = default;

  virtual Action act() = 0;
  virtual void update(const Action& action, const Outcome& outcome) = 0;
  virtual const DecisionTrace& last_trace() const = 0;
  virtual std::string_view name() const = 0;
};

}  // namespace bwak
