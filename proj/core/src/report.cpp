#include "bwak/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

namespace bwak {

using nlohmann::json;

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_trace_header(std::ostream& out) {
  out << "t,action,arm,skip_reason,reward,cost,cum_reward,cum_cost,inst_regret\n";
}

void write_trace_row(std::ostream& out, const RoundRecord& r) {
  out << r.t << ',' << (r.action.is_skip() ? "skip" : "pull") << ',' << r.action.arm + 1 << ','
      << to_string(r.action.reason) << ',' << format_number(r.reward) << ','
      << format_number(r.cost) << ',' << format_number(r.cum_reward) << ','
      << format_number(r.cum_cost) << ',' << format_number(r.inst_regret) << '\n';
}

void write_aggregate_csv(std::ostream& out, const ExperimentResult& result) {
  out << "t,policy,regret_mean,regret_std,skips_mean,skips_std,costgap_mean,costgap_std\n";
  for (const auto& report : result.reports) {
    for (const auto& p : report.series) {
      out << p.t << ',' << to_string(report.policy) << ',' << format_number(p.regret_mean) << ','
          << format_number(p.regret_std) << ',' << format_number(p.skips_mean) << ','
          << format_number(p.skips_std) << ',' << format_number(p.costgap_mean) << ','
          << format_number(p.costgap_std) << '\n';
    }
  }
}

namespace {

json base_json(const Base& base) {
  json arms = json::array();
  if (base.high) arms.push_back(*base.high + 1);
  if (base.low) arms.push_back(*base.low + 1);
  return arms;
}

json gaps_json(const GapReport& gaps) {
  json j;
  j["r_star"] = gaps.optimum.value;
  j["policy"] = gaps.optimum.policy;
  j["base"] = base_json(gaps.optimum.base);
  j["reward_gap"] = gaps.arm_reward_gap;
  j["cost_gap"] = gaps.arm_cost_gap;
  j["delta_min"] = gaps.min_cost_gap;
  json min_base = json::array();
  for (double g : gaps.min_base_gap) {
    min_base.push_back(std::isfinite(g) ? json(g) : json(nullptr));
  }
  j["min_base_gap"] = min_base;
  json bases = json::array();
  for (const auto& bg : gaps.base_gaps) {
    bases.push_back({{"base", base_json(bg.base)}, {"reward", bg.reward}, {"gap", bg.gap}});
  }
  j["base_gaps"] = bases;
  return j;
}

}  // namespace

std::string oracle_json(const InstanceConfig& instance, const GapReport& gaps) {
  json j = gaps_json(gaps);
  j["K"] = instance.num_arms();
  j["c"] = instance.c;
  j["null_arm"] = instance.null_arm() + 1;
  return j.dump(2);
}

std::string summary_json(const ExperimentConfig& config, const ExperimentResult& result) {
  json j;
  j["instance"] = {{"mu", config.instance.mu()},
                   {"rho", config.instance.rho()},
                   {"c", config.instance.c},
                   {"family", std::string(to_string(config.instance.family))},
                   {"seed", config.instance.seed}};
  j["T"] = config.horizon;
  j["trials"] = config.trials;
  j["oracle"] = gaps_json(result.oracle);
  json policies = json::object();
  for (const auto& report : result.reports) {
    json p;
    if (!report.series.empty()) {
      const auto& last = report.series.back();
      p["regret_mean"] = last.regret_mean;
      p["regret_std"] = last.regret_std;
      p["skips_mean"] = last.skips_mean;
      p["skips_std"] = last.skips_std;
      p["costgap_mean"] = last.costgap_mean;
      p["costgap_std"] = last.costgap_std;
    }
    json trials = json::array();
    for (const auto& tr : report.trials) {
      trials.push_back({{"trial", tr.trial},
                        {"seed", tr.seed},
                        {"reward", tr.cumulative_reward},
                        {"regret", tr.regret},
                        {"phase_guard_skips", tr.phase_guard_skips},
                        {"anytime_guard_skips", tr.anytime_guard_skips},
                        {"final_cost_gap", tr.final_cost_gap},
                        {"max_constraint_excess", tr.max_constraint_excess}});
    }
    p["trials"] = trials;
    policies[std::string(to_string(report.policy))] = p;
  }
  j["policies"] = policies;
  return j.dump(2);
}

}  // namespace bwak
