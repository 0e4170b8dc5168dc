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

#pragma once

#include "epol/adversary.hpp"
#include "epol/graph.hpp"
#include "epol/protocol.hpp"
#include "epol/rng.hpp"
#include "epol/roles.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace epol {

struct PollConfig
{
  int                 k{1};
  int                 m{1};
  std::vector<double> gamma{0.0, 1.0};
  double              alpha{0.5};
  bool                early_decision{true};
};

/// A graph with its per-source witness orderings, computed once and reused
/// across trials.
struct PreparedGraph
{
  SocialGraph                 graph;
  int                         m{1};
  int                         diameter{0};
  std::vector<SourceOrdering> orderings;

  /// Throws InvalidGraph unless the graph is connected and m-broadcasting.
  static PreparedGraph Prepare(SocialGraph graph, int m);
};

enum class CrashTiming : std::uint8_t
{
  kWindow,   // uniform in the sharing or the broadcast window (equal odds)
  kAtStart   // crashed before sending anything
};

struct FaultPlan
{
  double      r{0.0};
  double      l{0.0};
  CrashTiming timing{CrashTiming::kWindow};
  bool        exempt_dishonest{false};
  /// Crashes that happen regardless of r: (node, time).
  std::vector<std::pair<NodeId, double>> forced_crashes;
};

struct RunOptions
{
  double min_delay{1.0};
  double max_delay{10.0};
  /// Only run the sharing phase (observation experiments).
  bool stop_after_sharing{false};
  /// Gap between consecutive SHARE sends of one node; 0 sends them together.
  double share_spacing{0.0};
  /// Broadcast at this time even if some shares are missing.
  std::optional<double> sharing_deadline;
  bool record_trace{false};
  /// Reject coalitions that violate the P_g3 condition.
  bool strict_pg3{false};
};

/// Per-trial overrides; unset members are drawn from the trial seed.
struct PollSetup
{
  std::optional<std::vector<Vote>> votes;
  std::optional<RoleAssignment>    roles;
};

struct TraceRecord
{
  double  time{0.0};
  Message message;
};

enum class DecisionState : std::uint8_t
{
  kPending,
  kCorrect,
  kWrong,
  kUndecidable
};

struct NodeMetrics
{
  std::optional<int> result;
  int                partial_result{0};
  bool               crashed{false};
  bool               dishonest{false};
  NodeCounters       counters;
  std::size_t        storage_high_water{0};
  std::size_t        decided{0};
};

struct TrialMetrics
{
  int                       truth{0};
  std::vector<Vote>         votes;
  std::vector<int>          share_index;
  std::vector<int>          broadcast_value;  // c_s as broadcast, 0 if never
  std::vector<bool>         broadcast;
  std::vector<NodeMetrics>  nodes;
  /// decisions[n * N + s]: what node n holds for source s.
  std::vector<DecisionState> decisions;
  ObservationLog            observations;
  std::size_t               detection_events{0};
  std::size_t               decision_failures{0};
  std::size_t               wrong_decisions{0};  // honest node, honest source
  int                       max_impact{0};       // over live honest nodes with a result
  bool                      terminated{false};   // every live honest node aggregated
  std::size_t               events{0};
  double                    end_time{0.0};
  std::vector<TraceRecord>  trace;

  DecisionState decision(NodeId n, NodeId s) const
  {
    return decisions.at(static_cast<std::size_t>(n) * nodes.size() + s);
  }
};

/// Draws each vote independently: +1 with probability alpha.
std::vector<Vote> DrawVotes(NodeId node_count, double alpha, Rng &rng);

/// Runs one poll to event-queue exhaustion. Deterministic for a fixed seed.
TrialMetrics RunPoll(PreparedGraph const &prepared, PollConfig const &config,
                     AdversaryModel const &adversary, FaultPlan const &faults,
                     RunOptions const &options, std::uint64_t seed, PollSetup const &setup = {});

/// Convenience overload that prepares the graph first.
TrialMetrics RunPoll(SocialGraph const &graph, PollConfig const &config, AdversaryModel const &adversary,
                     FaultPlan const &faults, std::uint64_t seed);

}  // namespace epol
