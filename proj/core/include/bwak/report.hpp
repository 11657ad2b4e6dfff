#pragma once

#include <iosfwd>
#include <string>

#include "bwak/harness.hpp"

namespace bwak {

/// Fixed, locale-independent number formatting shared by every writer.
std::string format_number(double x);

/// `t,action,arm,skip_reason,reward,cost,cum_reward,cum_cost,inst_regret`.
/// Arms are written 1-based; the null arm is K+1.
void write_trace_header(std::ostream& out);
void write_trace_row(std::ostream& out, const RoundRecord& record);

/// `t,policy,regret_mean,regret_std,skips_mean,skips_std,costgap_mean,costgap_std`,
/// one row per checkpoint per policy.
void write_aggregate_csv(std::ostream& out, const ExperimentResult& result);

/// Oracle solution, gap report and per-policy final metrics as JSON.
std::string summary_json(const ExperimentConfig& config, const ExperimentResult& result);

/// Oracle solution and gap report as JSON.
std::string oracle_json(const InstanceConfig& instance, const GapReport& gaps);

}  // namespace bwak
