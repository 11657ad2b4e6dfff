#include "bwak/policy.hpp"

namespace bwak {

std::string_view to_string(SkipReason reason) {
  switch (reason) {
    case SkipReason::kNone:
      return "";
    case SkipReason::kPhaseGuard:
      return "phase_guard";
    case SkipReason::kAnytimeGuard:
      return "anytime_guard";
  }
  return "";
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::kGatedSkip:
      return "gated_skip";
    case Branch::kGatedPull:
      return "gated_pull";
    case Branch::kAnytimeSkip:
      return "anytime_skip";
    case Branch::kInitPull:
      return "init_pull";
    case Branch::kSingleton:
      return "singleton";
    case Branch::kMixture:
      return "mixture";
  }
  return "";
}

}  // namespace bwak
