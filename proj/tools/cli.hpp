#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bwak::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitConstraintViolation = 3;

/// Entry point of the `bwak` tool. `args` excludes the program name;
/// `seed_env` is the value of BWAK_SEED, if set.
///
///   bwak oracle  --config PATH [--override key=value]...
///   bwak run     --config PATH [--out DIR] [--threads N] [--override key=value]...
///   bwak compare --config PATH [--threads N] [--override key=value]...
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& seed_env = std::nullopt);

}  // namespace bwak::cli
