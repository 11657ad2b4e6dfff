#include "bwak/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "bwak/numeric.hpp"
#include "bwak/ops.hpp"
#include "bwak/report.hpp"
#include "bwak/rng.hpp"
#include "bwak/suak.hpp"

namespace bwak {

std::unique_ptr<Policy> make_policy(PolicyKind kind, const InstanceConfig& instance,
                                    std::uint64_t horizon, std::uint64_t seed) {
  switch (kind) {
    case PolicyKind::kSuak:
      return std::make_unique<SuakPolicy>(instance.num_arms(), instance.c, seed);
    case PolicyKind::kOps:
      return std::make_unique<OpsPolicy>(instance.num_arms(), instance.c, horizon, seed);
  }
  throw std::invalid_argument("unknown policy kind");
}

namespace {

constexpr std::size_t kContextRounds = 16;

class RecentRounds {
 public:
  void push(const RoundRecord& r) {
    buf_[next_ % kContextRounds] = r;
    ++next_;
  }

  void dump(std::ostream& out) const {
    write_trace_header(out);
    const std::size_t n = std::min<std::size_t>(next_, kContextRounds);
    for (std::size_t i = next_ - n; i < next_; ++i) write_trace_row(out, buf_[i % kContextRounds]);
  }

 private:
  std::array<RoundRecord, kContextRounds> buf_{};
  std::size_t next_ = 0;
};

double sample_std(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

TrialSummary run_policy_impl(Policy* policy, PolicyKind kind, const InstanceConfig& instance,
                             std::uint64_t horizon, std::uint64_t trial,
                             const TrialOptions& options);

}  // namespace

TrialSummary run_trial(PolicyKind kind, const InstanceConfig& instance, std::uint64_t horizon,
                       std::uint64_t trial, const TrialOptions& options) {
  validate(instance);
  if (horizon == 0) return run_policy_impl(nullptr, kind, instance, 0, trial, options);
  auto policy = make_policy(kind, instance, horizon,
                            stream_seed(trial_seed(instance.seed, trial), Stream::kPolicy));
  return run_policy_impl(policy.get(), kind, instance, horizon, trial, options);
}

TrialSummary run_policy(Policy& policy, PolicyKind kind, const InstanceConfig& instance,
                        std::uint64_t horizon, std::uint64_t trial, const TrialOptions& options) {
  validate(instance);
  return run_policy_impl(&policy, kind, instance, horizon, trial, options);
}

namespace {

TrialSummary run_policy_impl(Policy* policy, PolicyKind kind, const InstanceConfig& instance,
                             std::uint64_t horizon, std::uint64_t trial,
                             const TrialOptions& options) {
  TrialSummary summary;
  summary.policy = kind;
  summary.trial = trial;
  summary.seed = trial_seed(instance.seed, trial);
  summary.horizon = horizon;
  summary.final_cost_gap = 0.0;
  summary.min_cost_gap = horizon ? std::numeric_limits<double>::infinity() : 0.0;
  summary.max_constraint_excess = horizon ? -std::numeric_limits<double>::infinity() : 0.0;
  if (horizon == 0) return summary;

  const double c = instance.c;
  const double r_star = solve_opt_lp(instance.mu(), instance.rho(), c).value;
  const std::uint64_t stride =
      options.stride ? options.stride : std::max<std::uint64_t>(1, horizon / 500);

  Environment env(instance, stream_seed(summary.seed, Stream::kEnvironment));

  CompensatedSum reward_sum;
  CompensatedSum cost_sum;
  RecentRounds recent;
  summary.checkpoints.reserve(horizon / stride + 1);

  for (std::uint64_t t = 1; t <= horizon; ++t) {
    const Action action = policy->act();
    const Outcome outcome = env.sample(action.arm);
    policy->update(action, outcome);
    const DecisionTrace& trace = policy->last_trace();

    reward_sum.add(outcome.reward);
    cost_sum.add(outcome.cost);
    const double cum_cost = cost_sum.value();
    const double ct = c * static_cast<double>(t);

    RoundRecord record{t,       action,   outcome.reward, outcome.cost, reward_sum.value(),
                       cum_cost, r_star - outcome.reward};
    recent.push(record);
    if (options.observer) options.observer(record, trace);

    if (action.reason == SkipReason::kPhaseGuard) ++summary.phase_guard_skips;
    if (action.reason == SkipReason::kAnytimeGuard) ++summary.anytime_guard_skips;

    if (trace.omega) {
      ++summary.omega_evaluations;
      const double w = *trace.omega;
      const double d = trace.delta_min_lcb.value_or(0.0);
      if (!(w >= d / 3.0 && w <= std::min(d, 0.5))) ++summary.omega_bracket_violations;
    }

    const double excess = cum_cost - ct;
    summary.max_constraint_excess = std::max(summary.max_constraint_excess, excess);
    const double gap = c - cum_cost / static_cast<double>(t);
    summary.min_cost_gap = std::min(summary.min_cost_gap, gap);
    if (excess > kConstraintTolerance) {
      std::ostringstream msg;
      msg << "anytime constraint violated by policy " << policy->name() << " in trial " << trial
          << " (seed " << summary.seed << ") at round " << t << ": S_c = " << cum_cost
          << " > c t = " << ct << "\nrecent rounds:\n";
      recent.dump(msg);
      throw ConstraintViolation(msg.str());
    }

    if (t % stride == 0 || t == horizon) {
      summary.checkpoints.push_back({t, regret_reference(r_star, t, reward_sum.value()),
                                     summary.skips(), gap});
    }
  }

  summary.cumulative_reward = reward_sum.value();
  summary.cumulative_cost = cost_sum.value();
  summary.regret = regret_reference(r_star, horizon, summary.cumulative_reward);
  summary.final_cost_gap = c - summary.cumulative_cost / static_cast<double>(horizon);
  return summary;
}

}  // namespace

const SeriesPoint* AggregateReport::at(std::uint64_t t) const {
  const auto it = std::lower_bound(series.begin(), series.end(), t,
                                   [](const SeriesPoint& p, std::uint64_t v) { return p.t < v; });
  return it != series.end() && it->t == t ? &*it : nullptr;
}

AggregateReport aggregate(PolicyKind policy, std::vector<TrialSummary> trials) {
  AggregateReport report;
  report.policy = policy;
  if (trials.empty()) return report;
  const std::size_t points = trials.front().checkpoints.size();
  for (const auto& tr : trials) {
    if (tr.checkpoints.size() != points) {
      throw std::invalid_argument("aggregate: trials have different checkpoint grids");
    }
  }
  std::vector<double> regret(trials.size());
  std::vector<double> skips(trials.size());
  std::vector<double> gap(trials.size());
  for (std::size_t p = 0; p < points; ++p) {
    for (std::size_t i = 0; i < trials.size(); ++i) {
      const Checkpoint& cp = trials[i].checkpoints[p];
      regret[i] = cp.regret;
      skips[i] = static_cast<double>(cp.skips);
      gap[i] = cp.cost_gap;
    }
    SeriesPoint sp;
    sp.t = trials.front().checkpoints[p].t;
    sp.regret_mean = mean_of(regret);
    sp.regret_std = sample_std(regret, sp.regret_mean);
    sp.skips_mean = mean_of(skips);
    sp.skips_std = sample_std(skips, sp.skips_mean);
    sp.costgap_mean = mean_of(gap);
    sp.costgap_std = sample_std(gap, sp.costgap_mean);
    report.series.push_back(sp);
  }
  report.trials = std::move(trials);
  return report;
}

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned threads,
                                const std::optional<std::filesystem::path>& trace_dir) {
  validate(config);
  ExperimentResult result;
  result.oracle = compute_gaps(config.instance);

  const std::size_t per_policy = config.trials;
  const std::size_t jobs = config.policies.size() * per_policy;
  std::vector<TrialSummary> summaries(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const PolicyKind kind = config.policies[job / per_policy];
      const std::uint64_t trial = job % per_policy;
      try {
        TrialOptions options;
        options.stride = config.effective_stride();
        std::ofstream trace_out;
        if (trace_dir) {
          const auto path = *trace_dir / ("trace_" + std::string(to_string(kind)) + "_" +
                                          std::to_string(trial) + ".csv");
          trace_out.open(path);
          if (!trace_out) throw std::runtime_error("cannot write " + path.string());
          write_trace_header(trace_out);
          options.observer = [&trace_out](const RoundRecord& r, const DecisionTrace&) {
            write_trace_row(trace_out, r);
          };
        }
        summaries[job] = run_trial(kind, config.instance, config.horizon, trial, options);
      } catch (...) {
        errors[job] = std::current_exception();
      }
    }
  };

  const unsigned n_threads =
      static_cast<unsigned>(std::clamp<std::size_t>(threads ? threads : 1, 1, jobs));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  for (std::size_t p = 0; p < config.policies.size(); ++p) {
    std::vector<TrialSummary> group(std::make_move_iterator(summaries.begin() + p * per_policy),
                                    std::make_move_iterator(summaries.begin() + (p + 1) * per_policy));
    result.reports.push_back(aggregate(config.policies[p], std::move(group)));
  }
  return result;
}

}  // namespace bwak
