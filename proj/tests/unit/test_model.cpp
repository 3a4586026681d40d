#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "femtonc/error.hpp"
#include "femtonc/model.hpp"
#include "femtonc/scenario_io.hpp"
#include "oracles.hpp"

using namespace femtonc;

namespace {

Scenario one_fc(double radius, Point client)
{
  Scenario s;
  s.num_files = 2;
  s.mbs_radius = 1000;
  s.fcs.push_back({0, {0, 0}, radius, FileSet(2, {0})});
  s.clients.push_back({0, client, FileSet(2), 1});
  return s;
}

}  // namespace

TEST(Coverage, BoundaryIsInclusive)
{
  Scenario s = one_fc(50, {30, 40});
  EXPECT_EQ(coverage_set(s.fcs[0], s), std::vector<ClientId>{0});
  s.clients[0].position = {30, 40.001};
  EXPECT_TRUE(coverage_set(s.fcs[0], s).empty());
}

TEST(Coverage, ZeroRadiusCoversOwnPosition)
{
  Scenario s = one_fc(0, {0, 0});
  EXPECT_EQ(coverage_set(s.fcs[0], s).size(), 1u);
}

TEST(Coverage, MatchesDirectDistances)
{
  ScenarioParams p;
  p.U = 20;
  p.C = 3;
  p.fc_radius = 30;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    p.seed = seed;
    Scenario s = generate_scenario(p);
    auto cov = coverage_matrix(s);
    for (const auto& fc : s.fcs) {
      std::vector<ClientId> expect;
      for (const auto& c : s.clients) {
        EXPECT_EQ(cov[fc.id][c.id], oracle::covered(fc, c));
        if (oracle::covered(fc, c)) expect.push_back(c.id);
      }
      EXPECT_EQ(coverage_set(fc, s), expect);
    }
  }
}

TEST(Placement, ThreeFilesTwoFullCaches)
{
  auto plan = systematic_placement(3, 2, 3);
  ASSERT_EQ(plan.caches.size(), 2u);
  EXPECT_EQ(plan.caches[0], (std::vector<FileId>{0, 1, 2}));
  EXPECT_EQ(plan.caches[1], (std::vector<FileId>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(plan.repetition_index, 2.0);
}

TEST(Placement, WrapsAround)
{
  auto plan = systematic_placement(10, 2, 6);
  EXPECT_EQ(plan.caches[0], (std::vector<FileId>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(plan.caches[1], (std::vector<FileId>{6, 7, 8, 9, 0, 1}));
  EXPECT_DOUBLE_EQ(plan.repetition_index, 1.2);
}

TEST(Placement, IntegerRepetitionGivesEqualCopies)
{
  auto plan = systematic_placement(10, 4, 5);
  for (int n : oracle::copies(plan.caches, 10)) EXPECT_EQ(n, 2);
  EXPECT_DOUBLE_EQ(plan.repetition_index, 2.0);
  EXPECT_DOUBLE_EQ(plan.B, 2.0);

  auto p2 = systematic_placement(12, 3, 8);
  for (int n : oracle::copies(p2.caches, 12)) EXPECT_EQ(n, 2);
}

TEST(Placement, CopiesDifferByAtMostOne)
{
  for (int F = 1; F <= 12; ++F)
    for (int C = 0; C <= 6; ++C)
      for (int Hc = 0; Hc <= F; ++Hc) {
        auto n = oracle::copies(systematic_placement(F, C, Hc).caches, F);
        auto [lo, hi] = std::minmax_element(n.begin(), n.end());
        EXPECT_LE(*hi - *lo, 1) << F << ' ' << C << ' ' << Hc;
      }
}

TEST(Placement, CacheLargerThanLibraryRejected)
{
  EXPECT_THROW(systematic_placement(5, 2, 6), InvalidConfiguration);
}

TEST(Generate, SmallNetworkShape)
{
  ScenarioParams p;  // F=10, C=2, sigma_c=0.7, sigma_u=0.1
  p.U = 25;
  EXPECT_EQ(p.Hc(), 7);
  EXPECT_EQ(p.Hu(), 1);
  Scenario s = generate_scenario(p);
  validate_scenario(s);
  ASSERT_EQ(s.num_clients(), 25);
  ASSERT_EQ(s.num_fcs(), 2);
  for (const auto& fc : s.fcs) {
    EXPECT_EQ(fc.cache.size(), 7);
    EXPECT_LE(distance(fc.position, {0, 0}), p.mbs_radius);
  }
  for (const auto& c : s.clients) {
    EXPECT_EQ(c.has.size(), 1);
    EXPECT_FALSE(c.has.contains(c.wants));
    EXPECT_LE(distance(c.position, {0, 0}), p.mbs_radius + 1e-9);
  }
}

TEST(Generate, NoSideInformation)
{
  ScenarioParams p;
  p.sigma_u = 0;
  p.U = 30;
  for (const auto& c : generate_scenario(p).clients) EXPECT_TRUE(c.has.empty());
}

TEST(Generate, SameSeedSameBytes)
{
  ScenarioParams p;
  p.U = 15;
  p.seed = 77;
  EXPECT_EQ(format_scenario(generate_scenario(p)), format_scenario(generate_scenario(p)));
  ScenarioParams q = p;
  q.seed = 78;
  EXPECT_NE(format_scenario(generate_scenario(p)), format_scenario(generate_scenario(q)));
}

TEST(Generate, FixedLayoutUsesPositions)
{
  ScenarioParams p;
  p.fc_layout = FcLayout::Fixed;
  p.fc_positions = {{-10, 0}, {10, 5}};
  Scenario s = generate_scenario(p);
  EXPECT_EQ(s.fcs[0].position, (Point{-10, 0}));
  EXPECT_EQ(s.fcs[1].position, (Point{10, 5}));
  p.fc_positions.pop_back();
  EXPECT_THROW(generate_scenario(p), InvalidConfiguration);
}

TEST(Generate, FullSideInformationRejected)
{
  ScenarioParams p;
  p.sigma_u = 1.0;
  EXPECT_THROW(generate_scenario(p), InvalidConfiguration);
  p.sigma_u = 0.96;  // rounds to H_u = F
  EXPECT_THROW(generate_scenario(p), InvalidConfiguration);
  p.sigma_u = 0.9;
  EXPECT_NO_THROW(generate_scenario(p));
}

TEST(Generate, HasSetsUniformOverOtherFiles)
{
  ScenarioParams p;
  p.F = 5;
  p.sigma_u = 0.4;
  p.U = 400;
  Scenario s = generate_scenario(p);
  // each of the 4 other files lands in a Has set of size 2 with prob 1/2
  int hits = 0, total = 0;
  for (const auto& c : s.clients)
    for (FileId f = 0; f < p.F; ++f)
      if (f != c.wants) {
        ++total;
        hits += c.has.contains(f);
      }
  EXPECT_NEAR(static_cast<double>(hits) / total, 0.5, 0.03);
}

TEST(Validate, RejectsWantedFileInHasSet)
{
  Scenario s = one_fc(10, {0, 0});
  s.clients[0].has.insert(1);
  EXPECT_THROW(validate_scenario(s), InvalidInput);
}

TEST(Validate, RejectsClientOutsideMacrocell)
{
  Scenario s = one_fc(10, {0, 0});
  s.mbs_radius = 5;
  s.clients[0].position = {6, 0};
  EXPECT_THROW(validate_scenario(s), InvalidInput);
}

TEST(Rounding, HalfUp)
{
  EXPECT_EQ(round_half_up(0.1 * 10), 1);
  EXPECT_EQ(round_half_up(2.5), 3);
  EXPECT_EQ(round_half_up(2.49), 2);
  EXPECT_EQ(round_half_up(0.7 * 10), 7);
}
