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

#include "epol/rng.hpp"
#include "epol/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace epol {

enum class CorruptMode : std::uint8_t
{
  kMinimum,  // rewrite to -(2k+1)
  kRandom    // uniform in [-(2k+1), 2k+1]
};

/// Coalition membership and the misbehaviours it applies.
struct AdversaryModel
{
  std::vector<bool> coalition;  // empty means no dishonest node
  bool              overshare{true};
  bool              invert{true};
  bool              corrupt_forward{true};
  bool              out_of_range{false};
  CorruptMode       corrupt_mode{CorruptMode::kMinimum};
  /// Vote a coalition member is credited with in the ground truth.
  Vote              nominal_vote{Vote::kPlus};

  bool IsDishonest(NodeId n) const
  {
    return n < coalition.size() && coalition[n];
  }

  std::size_t size() const;
  std::vector<NodeId> Members() const;
};

AdversaryModel MakeCoalition(NodeId node_count, std::vector<NodeId> const &members);

/// Uniformly random coalition of the given size.
std::vector<bool> RandomCoalition(NodeId node_count, std::size_t size, Rng &rng);

/// 2k+1 shares of value -1.
std::vector<int> OvershareShares(int k);

/// +1 becomes -1, -1 is kept.
constexpr int ApplyInvert(int share) noexcept
{
  return share == 1 ? -1 : share;
}

/// Value a dishonest relay forwards instead of the value it decided.
int CorruptForward(AdversaryModel const &model, int k, int value, Rng &rng);

/// A share delivered by an honest producer to a coalition member.
struct Observation
{
  NodeId producer{0};
  NodeId consumer{0};
  int    value{0};
};

/// Coalition view of the sharing phase, in arrival order.
struct ObservationLog
{
  std::vector<Observation> entries;

  void Record(NodeId producer, NodeId consumer, int value)
  {
    entries.push_back(Observation{producer, consumer, value});
  }
};

enum class DisclosureRule : std::uint8_t
{
  kCertain,
  kGreedy,
  kNonGreedy,
  kCombined
};

std::string            ToString(DisclosureRule rule);
DisclosureRule         ParseDisclosureRule(std::string const &text);

/// What the scorer knows about the targets. share_index is only consulted by
/// the certain rule when the coalition is assumed to know it.
struct DisclosureTargets
{
  std::vector<Vote> truth;
  std::vector<int>  share_index;
  std::vector<bool> honest;
};

struct Verdict
{
  std::optional<Vote> vote;
  bool                certain{false};
  bool                correct{false};
};

struct DisclosureResult
{
  std::vector<Verdict> verdicts;  // one per node, empty verdict for coalition members

  std::size_t revealed() const;
  std::size_t correct() const;
  std::size_t certain() const;
};

/// Certain rule: a value observed i+1 times (knows_i) or k+1 times (otherwise).
DisclosureResult DiscloseCertain(ObservationLog const &log, DisclosureTargets const &targets, int k,
                                 bool knows_i);

/// Greedy rule: the first value to be observed rho+1 times.
DisclosureResult DiscloseGreedy(ObservationLog const &log, DisclosureTargets const &targets, int rho);

/// Non-greedy rule: strict majority of everything observed from the node.
DisclosureResult DiscloseNonGreedy(ObservationLog const &log, DisclosureTargets const &targets);

/// Certain first, greedy where no certain verdict exists, non-greedy last.
DisclosureResult DiscloseCombined(ObservationLog const &log, DisclosureTargets const &targets, int k,
                                  int rho, bool knows_i);

DisclosureResult Disclose(DisclosureRule rule, ObservationLog const &log,
                          DisclosureTargets const &targets, int k, int rho, bool knows_i);

/// Whether at most 2D votes were revealed with certainty.
bool CountRevealedBound(DisclosureResult const &result, std::size_t coalition_size);

}  // namespace epol
