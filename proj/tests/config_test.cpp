#include "bwak/config.hpp"

#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

namespace bwak {
namespace {

constexpr const char* kFourArm = R"(
# comment line
mu = 0.45, 0.7, 0.8
rho = 0.3, 0.75, 0.8   # trailing comment
c = 0.5
family = beta
seed = 42
policies = suak, ops
T = 500000
trials = 10
)";

TEST(ParseConfigTest, ReadsAllFields) {
  const ExperimentConfig cfg = parse_config(kFourArm);
  ASSERT_EQ(cfg.instance.num_arms(), 3u);
  EXPECT_EQ(cfg.instance.arms[1].mu, 0.7);
  EXPECT_EQ(cfg.instance.arms[1].rho, 0.75);
  EXPECT_EQ(cfg.instance.c, 0.5);
  EXPECT_EQ(cfg.instance.family, Family::kBeta);
  EXPECT_EQ(cfg.instance.seed, 42u);
  EXPECT_EQ(cfg.policies, (std::vector<PolicyKind>{PolicyKind::kSuak, PolicyKind::kOps}));
  EXPECT_EQ(cfg.horizon, 500'000u);
  EXPECT_EQ(cfg.trials, 10u);
  EXPECT_EQ(cfg.effective_stride(), 1000u);
}

TEST(ParseConfigTest, ErrorsCarrySourceAndLine) {
  try {
    parse_config("mu = 0.5\nrho = 0.2\nc = abc\n", "bad.cfg");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.cfg:3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_config("mu = 0.5\nrho = 0.2\nc = 0.5\nbogus = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("mu = 0.5\nrho = 0.2\nc 0.5\n"), ConfigError);
  EXPECT_THROW(parse_config("mu = 0.5\nc = 0.5\n"), ConfigError);
  EXPECT_THROW(parse_config("mu = 0.5, 0.6\nrho = 0.2\nc = 0.5\n"), ConfigError);
  EXPECT_THROW(parse_config("mu = 0.5\nrho = 0.5\nc = 0.5\n"), ConfigError);  // zero cost gap
  EXPECT_THROW(parse_config("mu = 0.5\nrho = 0.2\nc = 0.5\ntrials = 0\n"), ConfigError);
  EXPECT_THROW(parse_config("mu = 0.5\nrho = 0.2\nc = 0.5\nT = 0\n"), ConfigError);
  EXPECT_THROW(parse_config("mu = 0.5\nrho = 0.2\nc = 0.5\npolicies =\n"), ConfigError);
  EXPECT_THROW(parse_config("mu = 0.5\nrho = 0.2\nc = 0.5\npolicies = ucb\n"), ConfigError);
  EXPECT_THROW(parse_config("mu = 0.5, 0.6\nrho = 0.2, 0.9\nc = 0.5\nT = 1\n"), ConfigError);
}

TEST(ParseConfigTest, MissingFileIsAConfigError) {
  EXPECT_THROW(load_config("/nonexistent/path.cfg"), ConfigError);
}

TEST(ParseConfigTest, ShippedPresetsLoad) {
  const char* root = std::getenv("BWAK_SOURCE_DIR");
  if (!root) GTEST_SKIP() << "BWAK_SOURCE_DIR not set";
  const std::string dir = std::string(root) + "/instances/";
  EXPECT_EQ(load_config(dir + "four_arm.cfg").instance.num_arms(), 3u);
  EXPECT_EQ(load_config(dir + "nine_arm.cfg").instance.num_arms(), 8u);
}

TEST(OverrideTest, AppliesAndValidates) {
  ExperimentConfig cfg = parse_config(kFourArm);
  apply_override(cfg, "trials=2");
  apply_override(cfg, "T = 1000");
  apply_override(cfg, "rho=0.2,0.9,0.95");
  EXPECT_EQ(cfg.trials, 2u);
  EXPECT_EQ(cfg.horizon, 1000u);
  EXPECT_EQ(cfg.instance.arms[2].rho, 0.95);
  EXPECT_EQ(cfg.instance.arms[2].mu, 0.8);
  EXPECT_THROW(apply_override(cfg, "trials"), ConfigError);
  EXPECT_THROW(apply_override(cfg, "trials=0"), ConfigError);
  EXPECT_THROW(apply_override(cfg, "rho=0.2"), ConfigError);
}

TEST(SerializeConfigTest, RoundTripsRandomConfigs) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    ExperimentConfig cfg;
    cfg.instance.c = 0.05 + 0.9 * unit(rng);
    const int k = 1 + static_cast<int>(rng() % 8);
    for (int a = 0; a < k; ++a) {
      double rho = unit(rng);
      if (std::fabs(rho - cfg.instance.c) < 1e-6) rho = cfg.instance.c / 2;
      cfg.instance.arms.push_back({unit(rng), rho});
    }
    cfg.instance.family = static_cast<Family>(rng() % 3);
    cfg.instance.seed = rng();
    cfg.policies = (rng() % 2) ? std::vector<PolicyKind>{PolicyKind::kOps}
                               : std::vector<PolicyKind>{PolicyKind::kSuak, PolicyKind::kOps};
    cfg.horizon = 10 + rng() % 1'000'000;
    cfg.trials = 1 + rng() % 20;
    cfg.stride = rng() % 1000;
    cfg.out_dir = "out/dir" + std::to_string(i);
    cfg.write_traces = rng() % 2;

    const ExperimentConfig back = parse_config(serialize_config(cfg));
    ASSERT_EQ(back.instance.num_arms(), cfg.instance.num_arms());
    for (int a = 0; a < k; ++a) {
      EXPECT_EQ(back.instance.arms[a].mu, cfg.instance.arms[a].mu);
      EXPECT_EQ(back.instance.arms[a].rho, cfg.instance.arms[a].rho);
    }
    EXPECT_EQ(back.instance.c, cfg.instance.c);
    EXPECT_EQ(back.instance.family, cfg.instance.family);
    EXPECT_EQ(back.instance.seed, cfg.instance.seed);
    EXPECT_EQ(back.policies, cfg.policies);
    EXPECT_EQ(back.horizon, cfg.horizon);
    EXPECT_EQ(back.trials, cfg.trials);
    EXPECT_EQ(back.stride, cfg.stride);
    EXPECT_EQ(back.out_dir, cfg.out_dir);
    EXPECT_EQ(back.write_traces, cfg.write_traces);
    EXPECT_EQ(serialize_config(back), serialize_config(cfg));
  }
}

}  // namespace
}  // namespace bwak
