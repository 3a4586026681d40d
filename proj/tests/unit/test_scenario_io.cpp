#include <gtest/gtest.h>

#include "femtonc/error.hpp"
#include "femtonc/fixtures.hpp"
#include "femtonc/scenario_io.hpp"

using namespace femtonc;

namespace {

void expect_same(const Scenario& a, const Scenario& b)
{
  ASSERT_EQ(a.num_files, b.num_files);
  EXPECT_EQ(a.mbs_radius, b.mbs_radius);
  EXPECT_EQ(a.seed, b.seed);
  ASSERT_EQ(a.num_clients(), b.num_clients());
  ASSERT_EQ(a.num_fcs(), b.num_fcs());
  for (int j = 0; j < a.num_clients(); ++j) {
    EXPECT_EQ(a.clients[j].position, b.clients[j].position);
    EXPECT_EQ(a.clients[j].wants, b.clients[j].wants);
    EXPECT_EQ(a.clients[j].has, b.clients[j].has);
  }
  for (int i = 0; i < a.num_fcs(); ++i) {
    EXPECT_EQ(a.fcs[i].position, b.fcs[i].position);
    EXPECT_EQ(a.fcs[i].radius, b.fcs[i].radius);
    EXPECT_EQ(a.fcs[i].cache, b.fcs[i].cache);
  }
}

int error_line(const std::string& text)
{
  try {
    parse_scenario_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(ScenarioIo, GeneratedRoundTrip)
{
  ScenarioParams p;
  p.U = 40;
  p.C = 4;
  p.sigma_u = 0.3;
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    p.seed = seed;
    Scenario s = generate_scenario(p);
    expect_same(s, parse_scenario_string(format_scenario(s)));
  }
}

TEST(ScenarioIo, FixturesRoundTrip)
{
  for (const auto& name : fixture_names()) {
    Scenario s = load_fixture(name);
    expect_same(s, parse_scenario_string(format_scenario(s)));
  }
}

TEST(ScenarioIo, MotivatingFixtureContents)
{
  Scenario s = load_fixture("motivating_example");
  EXPECT_EQ(s.num_files, 6);
  EXPECT_EQ(s.num_clients(), 6);
  EXPECT_EQ(s.num_fcs(), 2);
  EXPECT_EQ(s.fcs[0].cache.to_vector(), (std::vector<FileId>{0, 3, 5}));
  EXPECT_EQ(s.clients[5].wants, 2);
}

TEST(ScenarioIo, CommentsAndBlankLines)
{
  Scenario s = parse_scenario_string(
      "# header\n\nfiles 2   # two files\nmbs_radius 5\nclient 0 0 0 wants=1 has=\n");
  EXPECT_EQ(s.num_files, 2);
  EXPECT_EQ(s.num_clients(), 1);
  EXPECT_TRUE(s.clients[0].has.empty());
}

TEST(ScenarioIo, ErrorsNameTheLine)
{
  EXPECT_EQ(error_line("files 3\nmbs_radius 10\nclient 0 0 0 wants=x has=\n"), 3);
  EXPECT_EQ(error_line("files 3\nbogus 1\n"), 2);
  EXPECT_EQ(error_line("files 3\nmbs_radius 10\n\nfc 0 0 0 radius=4 cache=0\n"), 4);
  EXPECT_EQ(error_line("files 3\nmbs_radius 10\nclient 0 0 0 wants=1\n"), 3);
}

TEST(ScenarioIo, InconsistentScenarioRejected)
{
  // wants a file it already holds
  EXPECT_THROW(parse_scenario_string("files 3\nmbs_radius 10\nclient 0 0 0 wants=1 has=1\n"), Error);
  // file outside the library
  EXPECT_THROW(parse_scenario_string("files 3\nmbs_radius 10\nclient 0 0 0 wants=5 has=\n"), Error);
}

TEST(ScenarioIo, MissingFileReported)
{
  EXPECT_THROW(load_scenario("/nonexistent/path.scn"), Error);
}
