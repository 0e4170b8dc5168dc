//------------------------------------------------------------------------------
//
//   Copyright 2026 The epol-sim Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "epol/analysis.hpp"
#include "epol/generators.hpp"
#include "epol/montecarlo.hpp"
#include "epol/sim.hpp"
#include "epol/worst_case.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace epol {
namespace {

using namespace oracle;

PollConfig Config(int k, int m, double alpha = 0.5, bool early = true)
{
  PollConfig c;
  c.k              = k;
  c.m              = m;
  c.gamma          = std::vector<double>(static_cast<std::size_t>(k + 1), 1.0 / (k + 1));
  c.alpha          = alpha;
  c.early_decision = early;
  return c;
}

void ExpectExact(TrialMetrics const &t)
{
  EXPECT_TRUE(t.terminated);
  EXPECT_EQ(t.decision_failures, 0U);
  EXPECT_EQ(t.wrong_decisions, 0U);
  EXPECT_EQ(t.max_impact, 0);
  for (auto const &node : t.nodes)
  {
    ASSERT_TRUE(node.result.has_value());
    EXPECT_EQ(*node.result, t.truth);
  }
}

TEST(SimTest, HonestPollsAreExact)
{
  struct Case
  {
    SocialGraph graph;
    int         k;
    int         m;
  };
  std::vector<Case> cases{{GenerateLayered({3, 3, 3}, 3), 1, 3},
                          {GenerateBackbone(5, {3, 3, 3, 3, 3, 3, 3}, 3), 1, 3},
                          {GenerateClusterRing(16, 1), 1, 3},
                          {GenerateCircle(8, 1), 1, 2},
                          {ExampleGraph(), 1, 2},
                          {GenerateLayered({6, 6, 6}, 3), 2, 3}};
  for (auto const &c : cases)
  {
    auto prepared = PreparedGraph::Prepare(c.graph, c.m);
    for (bool early : {false, true})
    {
      for (std::uint64_t seed = 1; seed <= 10; ++seed)
      {
        ExpectExact(RunPoll(prepared, Config(c.k, c.m, 0.3 + 0.05 * static_cast<double>(seed), early),
                            AdversaryModel{}, FaultPlan{}, RunOptions{}, seed));
      }
    }
  }
}

TEST(SimTest, CircleWithClosedFormRoles)
{
  auto      prepared = PreparedGraph::Prepare(GenerateCircle(11, 2), 2);
  PollSetup setup;
  setup.roles = CircleRoles(11, 2);
  auto t      = RunPoll(prepared, Config(2, 2), AdversaryModel{}, FaultPlan{}, RunOptions{}, 4, setup);
  ExpectExact(t);
  EXPECT_EQ(t.share_index, std::vector<int>(11, 2));
}

TEST(SimTest, Deterministic)
{
  auto       prepared = PreparedGraph::Prepare(GenerateClusterRing(25, 1), 3);
  RunOptions opt;
  opt.record_trace = true;
  FaultPlan faults{0.05, 0.05};
  auto      adversary = MakeCoalition(25, {4, 17});
  auto      a         = RunPoll(prepared, Config(1, 3), adversary, faults, opt, 77);
  auto      b         = RunPoll(prepared, Config(1, 3), adversary, faults, opt, 77);
  EXPECT_EQ(a.votes, b.votes);
  EXPECT_EQ(a.events, b.events);
  EXPECT_EQ(a.end_time, b.end_time);
  EXPECT_EQ(a.decisions, b.decisions);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i)
  {
    EXPECT_EQ(a.trace[i].time, b.trace[i].time);
    EXPECT_EQ(a.trace[i].message.value, b.trace[i].message.value);
  }
  auto c = RunPoll(prepared, Config(1, 3), adversary, faults, opt, 78);
  EXPECT_NE(a.end_time, c.end_time);
}

TEST(SimTest, ExtremeFaults)
{
  auto prepared = PreparedGraph::Prepare(GenerateLayered({3, 3, 3}, 3), 3);
  auto all      = RunPoll(prepared, Config(1, 3), AdversaryModel{}, FaultPlan{1.0, 0.0}, RunOptions{}, 1);
  for (auto const &node : all.nodes)
  {
    EXPECT_TRUE(node.crashed);
  }
  auto silent = RunPoll(prepared, Config(1, 3), AdversaryModel{}, FaultPlan{0.0, 1.0}, RunOptions{}, 1);
  EXPECT_FALSE(silent.terminated);
  EXPECT_EQ(silent.events, 0U);
  for (auto const &node : silent.nodes)
  {
    EXPECT_FALSE(node.result.has_value());
  }
}

TEST(SimTest, ParameterChecks)
{
  auto prepared = PreparedGraph::Prepare(GenerateLayered({3, 3, 3}, 3), 3);
  EXPECT_THROW(RunPoll(prepared, Config(1, 2), {}, {}, {}, 1), InvalidParameter);
  auto bad  = Config(1, 3);
  bad.gamma = {1.0};
  EXPECT_THROW(RunPoll(prepared, bad, {}, {}, {}, 1), InvalidParameter);
  EXPECT_THROW(RunPoll(prepared, Config(1, 3), MakeCoalition(4, {0}), {}, {}, 1), InvalidParameter);
  EXPECT_THROW(RunPoll(prepared, Config(1, 3), {}, FaultPlan{1.5, 0.0}, {}, 1), InvalidParameter);
  EXPECT_THROW(PreparedGraph::Prepare(Path(5), 2), InvalidGraph);
  EXPECT_THROW(PreparedGraph::Prepare(SocialGraph{3}, 1), InvalidGraph);
}

TEST(SimTest, ObservationsComeFromHonestProducers)
{
  auto prepared  = PreparedGraph::Prepare(GenerateClusterRing(16, 1), 3);
  auto adversary = MakeCoalition(16, {0, 1});
  auto t         = RunPoll(prepared, Config(1, 3), adversary, {}, {}, 5);
  ASSERT_FALSE(t.observations.entries.empty());
  for (auto const &obs : t.observations.entries)
  {
    EXPECT_TRUE(adversary.IsDishonest(obs.consumer));
    EXPECT_FALSE(adversary.IsDishonest(obs.producer));
  }
  // coalition members overshare at the top index
  EXPECT_EQ(t.share_index[0], 1);
  EXPECT_EQ(t.share_index[1], 1);
}

TEST(SimTest, WorstCaseOnCliques)
{
  for (int k = 0; k <= 2; ++k)
  {
    for (int d = 1; d <= 2; ++d)
    {
      auto const n        = static_cast<NodeId>(d * (2 * k + 2) + 2);
      auto       prepared = PreparedGraph::Prepare(Clique(n), 1);
      auto       res      = WorstCaseImpactSearch(prepared, k, d, 3, 64);
      EXPECT_GT(res.placements, 0U);
      EXPECT_EQ(res.max_bias, MaxImpact(k, d)) << k << " " << d;
    }
  }
}

TEST(SimTest, OutOfRangeForwardsAreDetected)
{
  auto prepared          = PreparedGraph::Prepare(GenerateLayered({3, 3, 3}, 3), 3);
  auto adversary         = MakeCoalition(9, {4});
  adversary.out_of_range = true;
  auto t                 = RunPoll(prepared, Config(1, 3), adversary, {}, {}, 6);
  EXPECT_GT(t.detection_events, 0U);
  EXPECT_EQ(t.wrong_decisions, 0U);
}

// One dishonest node in the middle layer of [3,3,3] leaves every far node with
// two honest relays out of three; two dishonest nodes there do not.
TEST(SimTest, RelayToleranceCondition)
{
  auto prepared = PreparedGraph::Prepare(GenerateLayered({3, 3, 3}, 3), 3);
  auto one      = MakeCoalition(9, {4});
  auto two      = MakeCoalition(9, {3, 4});
  EXPECT_TRUE(CheckPg3(prepared.graph, 3, one.coalition, prepared.orderings));
  EXPECT_FALSE(CheckPg3(prepared.graph, 3, two.coalition, prepared.orderings));

  RunOptions strict;
  strict.strict_pg3 = true;
  EXPECT_THROW(RunPoll(prepared, Config(1, 3), two, {}, strict, 1), InvalidGraph);

  std::size_t wrong_one = 0;
  std::size_t wrong_two = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed)
  {
    wrong_one += RunPoll(prepared, Config(1, 3), one, {}, {}, seed).wrong_decisions;
    wrong_two += RunPoll(prepared, Config(1, 3), two, {}, {}, seed).wrong_decisions;
  }
  EXPECT_EQ(wrong_one, 0U);
  EXPECT_GT(wrong_two, 0U);
}

TEST(SimTest, SingleCrashImpact)
{
  auto       prepared = PreparedGraph::Prepare(GenerateLayered({6, 6, 6}, 3), 3);
  RunOptions opt;
  opt.share_spacing    = 3.0;
  opt.sharing_deadline = 40.0;
  Rng rng{9};
  for (int k : {1, 2})
  {
    for (int trial = 0; trial < 150; ++trial)
    {
      FaultPlan faults;
      auto const victim = static_cast<NodeId>(UniformInt(rng, 0, 17));
      faults.forced_crashes.emplace_back(victim, 0.5 + 100.0 * Uniform01(rng));
      auto t = RunPoll(prepared, Config(k, 3, 0.5, false), {}, faults, opt, static_cast<std::uint64_t>(trial));
      for (NodeId n = 0; n < 18; ++n)
      {
        if (!t.nodes[n].crashed)
        {
          EXPECT_LE(std::abs(t.nodes[n].partial_result - t.truth), CrashImpactBound(k))
              << "k=" << k << " trial " << trial << " node " << n;
        }
      }
    }
  }
}

TEST(SimTest, StorageAndForwardCounts)
{
  auto const  graph    = GenerateClusterRing(25, 1);
  auto        prepared = PreparedGraph::Prepare(graph, 3);
  auto        t        = RunPoll(prepared, Config(1, 3), {}, {}, {}, 12);
  NodeId const n       = graph.size();
  for (NodeId x = 0; x < n; ++x)
  {
    auto const bounds = ComputeComplexityBounds(1, 3, static_cast<int>(n), static_cast<int>(graph.degree(x)));
    EXPECT_LE(static_cast<long long>(t.nodes[x].storage_high_water), bounds.spatial);
    std::size_t expected_forwards = 0;
    for (NodeId s = 0; s < n; ++s)
    {
      if (s != x)
      {
        expected_forwards += prepared.orderings[s].succeeding[x].size();
      }
    }
    auto const &c = t.nodes[x].counters;
    EXPECT_EQ(c.forwards_sent, expected_forwards);
    EXPECT_EQ(c.data_sent, graph.degree(x));
    EXPECT_EQ(c.shares_sent, static_cast<std::size_t>(2 * t.share_index[x] + 1));
  }
}

TEST(SimTest, TraceIsTimeOrdered)
{
  auto       prepared = PreparedGraph::Prepare(GenerateLayered({3, 3, 3}, 3), 3);
  RunOptions opt;
  opt.record_trace = true;
  auto t           = RunPoll(prepared, Config(1, 3), {}, {}, opt, 3);
  ASSERT_FALSE(t.trace.empty());
  for (std::size_t i = 1; i < t.trace.size(); ++i)
  {
    EXPECT_LE(t.trace[i - 1].time, t.trace[i].time);
  }
  EXPECT_TRUE(RunPoll(prepared, Config(1, 3), {}, {}, {}, 3).trace.empty());
}

TEST(MonteCarloTest, RunningStatMerge)
{
  RunningStat all;
  RunningStat left;
  RunningStat right;
  for (int i = 0; i < 100; ++i)
  {
    double const x = std::sin(i) * 10;
    all.Add(x);
    (i < 37 ? left : right).Add(x);
  }
  left.Merge(right);
  EXPECT_EQ(left.count(), 100U);
  EXPECT_NEAR(left.mean(), all.mean(), 1e-12);
  EXPECT_NEAR(left.variance(), all.variance(), 1e-10);
  EXPECT_EQ(left.min(), all.min());
  EXPECT_EQ(left.max(), all.max());
}

TEST(MonteCarloTest, ThreadCountDoesNotChangeResults)
{
  auto prepared = PreparedGraph::Prepare(GenerateLayered({3, 3, 3}, 3), 3);
  auto fn       = [&](std::size_t t) {
    return RunPoll(prepared, Config(1, 3), {}, FaultPlan{0.1, 0.1}, {}, t).end_time;
  };
  auto serial   = RunTrials<double>(20, 1, fn);
  auto parallel = RunTrials<double>(20, 3, fn);
  EXPECT_EQ(serial, parallel);
  EXPECT_THROW(RunTrials<int>(5, 2,
                              [](std::size_t t) -> int {
                                if (t == 3)
                                {
                                  throw std::runtime_error("boom");
                                }
                                return 0;
                              }),
               std::runtime_error);
}

}  // namespace
}  // namespace epol
