#include "bwak/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bwak {

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kSuak:
      return "suak";
    case PolicyKind::kOps:
      return "ops";
  }
  return "unknown";
}

PolicyKind parse_policy(std::string_view name) {
  if (name == "suak") return PolicyKind::kSuak;
  if (name == "ops") return PolicyKind::kOps;
  throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

std::uint64_t ExperimentConfig::effective_stride() const {
  if (stride > 0) return stride;
  return std::max<std::uint64_t>(1, horizon / 500);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

double parse_double(std::string_view s) {
  s = trim(s);
  // std::from_chars for double is unavailable in older libstdc++; strtod on a
  // null-terminated copy is equivalent here.
  const std::string copy(s);
  char* end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw std::invalid_argument("expected a number, got '" + copy + "'");
  }
  return v;
}

std::uint64_t parse_uint(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

bool parse_bool(std::string_view s) {
  s = trim(s);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::invalid_argument("expected a boolean, got '" + std::string(s) + "'");
}

std::vector<double> parse_doubles(std::string_view s) {
  std::vector<double> out;
  for (auto item : split_list(s)) out.push_back(parse_double(item));
  return out;
}

struct Pending {
  std::vector<double> mu;
  std::vector<double> rho;
  bool has_mu = false;
  bool has_rho = false;
  bool has_c = false;
};

void assign(ExperimentConfig& config, Pending& pending, std::string_view key,
            std::string_view value) {
  if (key == "mu") {
    pending.mu = parse_doubles(value);
    pending.has_mu = true;
  } else if (key == "rho") {
    pending.rho = parse_doubles(value);
    pending.has_rho = true;
  } else if (key == "c") {
    config.instance.c = parse_double(value);
    pending.has_c = true;
  } else if (key == "family") {
    config.instance.family = parse_family(trim(value));
  } else if (key == "seed") {
    config.instance.seed = parse_uint(value);
  } else if (key == "policies") {
    config.policies.clear();
    for (auto item : split_list(value)) {
      if (!item.empty()) config.policies.push_back(parse_policy(item));
    }
  } else if (key == "T" || key == "horizon") {
    config.horizon = parse_uint(value);
  } else if (key == "trials") {
    config.trials = parse_uint(value);
  } else if (key == "stride") {
    config.stride = parse_uint(value);
  } else if (key == "out") {
    config.out_dir = std::string(trim(value));
  } else if (key == "trace") {
    config.write_traces = parse_bool(value);
  } else {
    throw std::invalid_argument("unknown key '" + std::string(key) + "'");
  }
}

void merge_arms(ExperimentConfig& config, const Pending& pending) {
  if (!pending.has_mu && !pending.has_rho) return;
  const std::vector<double> mu = pending.has_mu ? pending.mu : config.instance.mu();
  const std::vector<double> rho = pending.has_rho ? pending.rho : config.instance.rho();
  if (mu.size() != rho.size()) {
    throw ConfigError("mu has " + std::to_string(mu.size()) + " entries but rho has " +
                      std::to_string(rho.size()));
  }
  config.instance.arms.clear();
  for (std::size_t i = 0; i < mu.size(); ++i) config.instance.arms.push_back({mu[i], rho[i]});
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text, std::string_view source) {
  ExperimentConfig config;
  Pending pending;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    auto where = [&] { return std::string(source) + ":" + std::to_string(line_no) + ": "; };
    if (eq == std::string_view::npos) throw ConfigError(where() + "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    try {
      assign(config, pending, key, value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where() + e.what());
    }
  }
  const std::string prefix = std::string(source) + ": ";
  if (!pending.has_mu || !pending.has_rho) throw ConfigError(prefix + "mu and rho are required");
  if (!pending.has_c) throw ConfigError(prefix + "c is required");
  try {
    merge_arms(config, pending);
    validate(config);
  } catch (const ConfigError& e) {
    throw ConfigError(prefix + e.what());
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

void apply_override(ExperimentConfig& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("override '" + std::string(assignment) + "' is not key=value");
  }
  Pending pending;
  try {
    assign(config, pending, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("override '" + std::string(assignment) + "': " + e.what());
  }
  merge_arms(config, pending);
  validate(config);
}

void validate(const ExperimentConfig& config) {
  if (config.policies.empty()) throw ConfigError("policies must not be empty");
  if (config.horizon < 1) throw ConfigError("T must be >= 1");
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  const bool has_ops = std::find(config.policies.begin(), config.policies.end(),
                                 PolicyKind::kOps) != config.policies.end();
  if (has_ops && config.horizon < config.instance.num_arms()) {
    throw ConfigError("ops needs T >= K to finish its initialization sweep");
  }
  try {
    validate(config.instance);
  } catch (const InvalidInstance& e) {
    throw ConfigError(e.what());
  }
}

std::string serialize_config(const ExperimentConfig& config) {
  auto join = [](const std::vector<double>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ", ";
      out += format_real(xs[i]);
    }
    return out;
  };
  std::string policies;
  for (std::size_t i = 0; i < config.policies.size(); ++i) {
    if (i) policies += ", ";
    policies += to_string(config.policies[i]);
  }
  std::ostringstream out;
  out << "mu = " << join(config.instance.mu()) << '\n'
      << "rho = " << join(config.instance.rho()) << '\n'
      << "c = " << format_real(config.instance.c) << '\n'
      << "family = " << to_string(config.instance.family) << '\n'
      << "seed = " << config.instance.seed << '\n'
      << "policies = " << policies << '\n'
      << "T = " << config.horizon << '\n'
      << "trials = " << config.trials << '\n'
      << "stride = " << config.stride << '\n'
      << "out = " << config.out_dir << '\n'
      << "trace = " << (config.write_traces ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace bwak
