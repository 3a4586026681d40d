#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "config.hpp"

using namespace femtonc;
using namespace femtonc::cli;

namespace {

struct CmdResult {
  int code;
  std::string out, err;
};

CmdResult run(const std::string& command, const std::string& config)
{
  std::ostringstream out, err;
  RunOptions o;
  o.timestamp = false;
  o.command = command;
  int code = dispatch(command, parse_config(config), o, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Config, Defaults)
{
  Config c = parse_config("");
  EXPECT_EQ(c.trials, 1000);
  EXPECT_EQ(c.params.F, 10);
  EXPECT_EQ(c.scheduler_policies().size(), 2u);
  SweepSpec spec = c.sweep_spec();
  EXPECT_EQ(spec.values.size(), 5u);
  EXPECT_EQ(spec.trials, 1000);
}

TEST(Config, ParsesValues)
{
  Config c = parse_config(
      "# comment\nF = 50\nC=5\nsigma_u=0.2\nsweep_var=fc_radius\nsweep_values=10,20\n"
      "policies=gvs-ggc:separate-graph\nfc_layout=fixed\nfc_positions=0:0;1:2;3:4;5:6;7:8\n"
      "fc_transmissions=0:0,5;1:1\n");
  EXPECT_EQ(c.params.F, 50);
  EXPECT_EQ(c.params.C, 5);
  EXPECT_EQ(c.sweep_var, SweepVar::FcRadius);
  EXPECT_EQ(c.sweep_values, (std::vector<double>{10, 20}));
  EXPECT_EQ(c.scheduler_policies().front().fc_mode, FcMode::SeparateGraph);
  ASSERT_EQ(c.params.fc_positions.size(), 5u);
  EXPECT_EQ(c.params.fc_positions[1], (Point{1, 2}));
  EXPECT_EQ(c.fc_transmissions.at(0), (std::vector<FileId>{0, 5}));
  EXPECT_EQ(c.fc_transmissions.at(1), (std::vector<FileId>{1}));
}

TEST(Config, RejectsUnknownKeyAndBadValues)
{
  EXPECT_THROW(parse_config("colour=red\n"), ConfigError);
  EXPECT_THROW(parse_config("F=ten\n"), ConfigError);
  EXPECT_THROW(parse_config("policies=fastest\n"), ConfigError);
  EXPECT_THROW(parse_config("just a line\n"), ConfigError);
  try {
    parse_config("F=10\n\nbogus=1\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
  }
}

TEST(Config, ResolvedListsEveryKey)
{
  Config c = parse_config("U=7\n");
  auto kv = resolved(c);
  Config again;
  for (const auto& [k, v] : kv) set_key(again, k, v);
  EXPECT_EQ(resolved(again), kv);
}

TEST(Cli, HeaderListsResolvedConfig)
{
  CmdResult r = run("fixtures", "");
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("# command=fixtures\n", 0), 0u);
  EXPECT_NE(r.out.find("# trials=1000\n"), std::string::npos);
  EXPECT_EQ(r.out.find("# generated="), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, ScheduleMotivatingFixture)
{
  CmdResult r = run("schedule", "fixture=motivating_example\npolicies=exact-exact\n");
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("\nn_mbs=1\n"), std::string::npos) << r.out;

  CmdResult f = run("schedule", "fixture=motivating_example\npolicies=exact-exact\n"
                          "fc_transmissions=0:0,5;1:1\n");
  EXPECT_NE(f.out.find("\nn_mbs=2\n"), std::string::npos) << f.out;

  CmdResult o = run("schedule", "fixture=motivating_example\npolicies=optimal\n");
  EXPECT_NE(o.out.find("mbs xor f1,f2"), std::string::npos) << o.out;
}

TEST(Cli, EmptyScenarioReport)
{
  CmdResult r = run("schedule", "U=0\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("n_mbs=0"), std::string::npos);
}

TEST(Cli, SolverLimitExitCode)
{
  CmdResult r = run("schedule", "U=20\npolicies=optimal\n");
  EXPECT_EQ(r.code, kSolverLimit);
  EXPECT_NE(r.err.find("gvs-ggc"), std::string::npos);
}

TEST(Cli, UnknownCommandAndMissingScenario)
{
  EXPECT_EQ(run("dance", "").code, kConfigError);
  EXPECT_EQ(run("schedule", "scenario=/no/such/file.scn\n").code, kConfigError);
}

TEST(Cli, SweepCsv)
{
  CmdResult r = run("sweep", "trials=3\nsweep_values=4\npolicies=gvs-ggc\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find(std::string(kMetricHeader) + "\n"), std::string::npos);
  EXPECT_NE(r.out.find("\nU,4,gvs-ggc,3,"), std::string::npos) << r.out;
}

TEST(Cli, TheoryFlagsNonIntegerRepetition)
{
  CmdResult r = run("theory", "sweep_values=10\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("theory_unavailable_noninteger_R"), std::string::npos);
  CmdResult ok = run("theory", "sigma_c=0.5\nfc_radius=120\nsweep_values=10,20\n");
  EXPECT_EQ(ok.out.find("theory_unavailable"), std::string::npos) << ok.out;
}

TEST(Cli, ValidateDefaultPassesAndZeroToleranceFails)
{
  CmdResult r = run("validate", "");
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("validation passed"), std::string::npos);

  CmdResult z = run("validate", "density_tolerance=0\n");
  EXPECT_EQ(z.code, kValidationFailed);
  EXPECT_NE(z.out.find("FAIL mbs_edge_density"), std::string::npos);
}

TEST(Cli, ValidateStableAcrossSeeds)
{
  for (int seed = 1; seed <= 5; ++seed) {
    CmdResult r = run("validate", "seed=" + std::to_string(seed) + "\n");
    EXPECT_EQ(r.code, kOk) << "seed " << seed << "\n" << r.out;
  }
}
