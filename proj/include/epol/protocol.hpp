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

#include "epol/graph.hpp"
#include "epol/rng.hpp"
#include "epol/roles.hpp"
#include "epol/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace epol {

struct ProtocolParams
{
  int  k{1};
  int  m{1};
  bool early_decision{true};  // decide once ceil((m+1)/2) identical values are held
};

struct Message
{
  enum class Kind : std::uint8_t
  {
    kShare,
    kData
  };

  Kind   kind{Kind::kShare};
  NodeId sender{0};
  NodeId receiver{0};
  NodeId source{0};  // DATA only
  int    value{0};   // share payload or collected data
  bool   forwarded{false};
};

/// Immutable inputs shared by every node of one poll.
struct ProtocolContext
{
  SocialGraph const                 *graph{nullptr};
  std::vector<SourceOrdering> const *orderings{nullptr};
  RoleAssignment const              *roles{nullptr};
  ProtocolParams                     params;
};

/// i+1 copies of the vote and i of its opposite, uniformly permuted.
std::vector<int> GenerateShares(Vote vote, int i, int k, Rng &rng);

/// Most represented value; nullopt when several values tie for the maximum.
std::optional<int> Decide(std::vector<int> const &values);

enum class ShareStatus : std::uint8_t
{
  kAccepted,
  kNotProducer,
  kBadPayload,
  kDuplicate
};

enum class DataStatus : std::uint8_t
{
  kDecidedDirect,  // received from the source itself
  kBuffered,
  kDecided,
  kUndecidable,    // m values held and no strict plurality
  kNotPreceding,
  kDuplicate,
  kAlreadySettled, // source already decided (or undecidable) at this node
  kNeighbourRelay, // relayed copy for a source adjacent to this node
  kOwnSource,
  kOutOfRange
};

struct NodeCounters
{
  std::size_t shares_sent{0};
  std::size_t data_sent{0};
  std::size_t forwards_sent{0};
  std::size_t shares_accepted{0};
  std::size_t shares_dropped{0};
  std::size_t data_received{0};
  std::size_t data_dropped{0};

  std::size_t messages_sent() const
  {
    return shares_sent + data_sent + forwards_sent;
  }
};

/// One honest participant's protocol state.
class NodeState
{
public:
  NodeState(ProtocolContext const &context, NodeId id, Vote vote);

  NodeId id() const noexcept
  {
    return id_;
  }

  Vote vote() const noexcept
  {
    return vote_;
  }

  int share_index() const;

  /// Generates honest shares and emits one SHARE per consumer.
  std::vector<Message> SharingPhase(Rng &rng);

  /// Emits the given share values to S_n in order (size must equal |S_n|).
  std::vector<Message> SendShares(std::vector<int> const &shares);

  ShareStatus OnShare(NodeId from, int payload);

  bool sharing_complete() const;

  bool broadcast_started() const noexcept
  {
    return broadcast_started_;
  }

  /// DATA(n, c_n) to every neighbour.
  std::vector<Message> StartBroadcast();

  DataStatus OnData(NodeId from, NodeId source, int value, std::vector<Message> &out);

  int collected() const noexcept
  {
    return collected_;
  }

  std::optional<int> decided(NodeId source) const
  {
    return decided_.at(source);
  }

  bool undecidable(NodeId source) const
  {
    return undecidable_.at(source);
  }

  std::vector<int> const &possible(NodeId source) const
  {
    return possible_.at(source);
  }

  std::size_t decided_count() const noexcept
  {
    return decided_count_;
  }

  std::size_t undecidable_count() const noexcept
  {
    return undecidable_count_;
  }

  bool ready() const;

  /// c_n plus every decided h_n[s]. Throws NotReady if any source is pending.
  int Aggregate() const;

  /// Same sum with undecided sources counted as zero.
  int PartialResult() const;

  NodeCounters const &counters() const noexcept
  {
    return counters_;
  }

  std::size_t StorageUnits() const;

  std::size_t storage_high_water() const noexcept
  {
    return storage_high_water_;
  }

  /// Senders whose DATA carried a value outside [-(2k+1), 2k+1].
  std::vector<NodeId> const &flagged() const noexcept
  {
    return flagged_;
  }

private:
  void Settle(NodeId source, int value, std::vector<Message> &out);
  void Touch();

  ProtocolContext const          *ctx_;
  NodeId                          id_;
  Vote                            vote_;
  int                             collected_{0};
  std::vector<bool>               share_seen_;  // indexed by producer position
  std::size_t                     share_count_{0};
  bool                            broadcast_started_{false};
  std::vector<std::vector<int>>   possible_;
  std::vector<std::vector<NodeId>> relayers_;
  std::vector<std::optional<int>> decided_;
  std::vector<bool>               undecidable_;
  std::size_t                     decided_count_{0};
  std::size_t                     undecidable_count_{0};
  std::size_t                     held_values_{0};
  NodeCounters                    counters_;
  std::size_t                     storage_high_water_{0};
  std::vector<NodeId>             flagged_;
};

}  // namespace epol
