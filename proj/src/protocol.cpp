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

#include "epol/protocol.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace epol {

std::vector<int> GenerateShares(Vote vote, int i, int k, Rng &rng)
{
  if (i < 0 || i > k)
  {
    throw InvalidParameter("share index " + std::to_string(i) + " outside [0, k]");
  }
  int const        v = ToInt(vote);
  std::vector<int> shares(static_cast<std::size_t>(2 * i + 1), -v);
  std::fill_n(shares.begin(), i + 1, v);
  std::shuffle(shares.begin(), shares.end(), rng);
  return shares;
}

std::optional<int> Decide(std::vector<int> const &values)
{
  if (values.empty())
  {
    throw InvalidParameter("Decide on an empty multiset");
  }
  std::map<int, int> tally;
  for (int x : values)
  {
    ++tally[x];
  }
  int                best  = 0;
  std::optional<int> value;
  for (auto const &[x, c] : tally)
  {
    if (c > best)
    {
      best  = c;
      value = x;
    }
    else if (c == best)
    {
      value.reset();
    }
  }
  return value;
}

NodeState::NodeState(ProtocolContext const &context, NodeId id, Vote vote)
  : ctx_{&context}
  , id_{id}
  , vote_{vote}
{
  NodeId const n = context.graph->size();
  share_seen_.assign(context.roles->producers.at(id).size(), false);
  possible_.resize(n);
  relayers_.resize(n);
  decided_.resize(n);
  undecidable_.assign(n, false);
  Touch();
}

int NodeState::share_index() const
{
  return ctx_->roles->share_index.at(id_);
}

std::vector<Message> NodeState::SharingPhase(Rng &rng)
{
  return SendShares(GenerateShares(vote_, share_index(), ctx_->params.k, rng));
}

std::vector<Message> NodeState::SendShares(std::vector<int> const &shares)
{
  auto const &consumers = ctx_->roles->consumers.at(id_);
  if (shares.size() != consumers.size())
  {
    throw InvalidParameter("share count differs from the consumer count");
  }
  std::vector<Message> out;
  out.reserve(shares.size());
  for (std::size_t j = 0; j < shares.size(); ++j)
  {
    out.push_back(Message{Message::Kind::kShare, id_, consumers[j], id_, shares[j], false});
  }
  counters_.shares_sent += out.size();
  return out;
}

ShareStatus NodeState::OnShare(NodeId from, int payload)
{
  auto const &producers = ctx_->roles->producers.at(id_);
  auto        it        = std::lower_bound(producers.begin(), producers.end(), from);
  if (it == producers.end() || *it != from)
  {
    ++counters_.shares_dropped;
    return ShareStatus::kNotProducer;
  }
  auto const pos = static_cast<std::size_t>(it - producers.begin());
  if (share_seen_[pos])
  {
    ++counters_.shares_dropped;
    return ShareStatus::kDuplicate;
  }
  if (payload != 1 && payload != -1)
  {
    ++counters_.shares_dropped;
    return ShareStatus::kBadPayload;
  }
  share_seen_[pos] = true;
  ++share_count_;
  collected_ += payload;
  ++counters_.shares_accepted;
  return ShareStatus::kAccepted;
}

bool NodeState::sharing_complete() const
{
  return share_count_ == share_seen_.size();
}

std::vector<Message> NodeState::StartBroadcast()
{
  std::vector<Message> out;
  if (broadcast_started_)
  {
    return out;
  }
  broadcast_started_ = true;
  for (NodeId r : ctx_->graph->neighbors(id_))
  {
    out.push_back(Message{Message::Kind::kData, id_, r, id_, collected_, false});
  }
  counters_.data_sent += out.size();
  return out;
}

DataStatus NodeState::OnData(NodeId from, NodeId source, int value, std::vector<Message> &out)
{
  ++counters_.data_received;
  auto drop = [this](DataStatus s) {
    ++counters_.data_dropped;
    return s;
  };

  int const bound = 2 * ctx_->params.k + 1;
  if (value < -bound || value > bound)
  {
    flagged_.push_back(from);
    return drop(DataStatus::kOutOfRange);
  }
  if (source == id_)
  {
    return drop(DataStatus::kOwnSource);
  }
  auto const &graph    = *ctx_->graph;
  auto const &ordering = ctx_->orderings->at(source);
  if (!graph.HasEdge(from, id_) || !ordering.Precedes(from, id_))
  {
    return drop(DataStatus::kNotPreceding);
  }
  bool const settled = decided_[source].has_value() || undecidable_[source];
  if (from == source)
  {
    if (settled)
    {
      return drop(DataStatus::kAlreadySettled);
    }
    Settle(source, value, out);
    return DataStatus::kDecidedDirect;
  }
  if (graph.HasEdge(source, id_))
  {
    return drop(DataStatus::kNeighbourRelay);
  }
  if (settled)
  {
    return drop(DataStatus::kAlreadySettled);
  }
  auto &relayers = relayers_[source];
  if (std::find(relayers.begin(), relayers.end(), from) != relayers.end())
  {
    return drop(DataStatus::kDuplicate);
  }
  relayers.push_back(from);
  auto &held = possible_[source];
  held.push_back(value);
  ++held_values_;
  Touch();

  int const m = ctx_->params.m;
  if (ctx_->params.early_decision)
  {
    auto const same = std::count(held.begin(), held.end(), value);
    if (same >= m / 2 + 1)
    {
      Settle(source, value, out);
      return DataStatus::kDecided;
    }
  }
  if (held.size() < static_cast<std::size_t>(m))
  {
    return DataStatus::kBuffered;
  }
  if (auto h = Decide(held))
  {
    Settle(source, *h, out);
    return DataStatus::kDecided;
  }
  undecidable_[source] = true;
  ++undecidable_count_;
  return DataStatus::kUndecidable;
}

void NodeState::Settle(NodeId source, int value, std::vector<Message> &out)
{
  decided_[source] = value;
  ++decided_count_;
  Touch();
  for (NodeId r : ctx_->orderings->at(source).succeeding.at(id_))
  {
    out.push_back(Message{Message::Kind::kData, id_, r, source, value, true});
    ++counters_.forwards_sent;
  }
}

bool NodeState::ready() const
{
  return decided_count_ + 1 == ctx_->graph->size();
}

int NodeState::Aggregate() const
{
  if (!ready())
  {
    throw NotReady("node " + std::to_string(id_) + " has undecided sources");
  }
  return PartialResult();
}

int NodeState::PartialResult() const
{
  int result = collected_;
  for (NodeId s = 0; s < decided_.size(); ++s)
  {
    if (s != id_ && decided_[s])
    {
      result += *decided_[s];
    }
  }
  return result;
}

std::size_t NodeState::StorageUnits() const
{
  auto const &roles = *ctx_->roles;
  return roles.consumers.at(id_).size() + roles.producers.at(id_).size() +
         ctx_->graph->degree(id_) + ctx_->graph->size() + held_values_ + decided_count_;
}

void NodeState::Touch()
{
  storage_high_water_ = std::max(storage_high_water_, StorageUnits());
}

}  // namespace epol
