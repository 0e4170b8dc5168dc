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

#include "epol/sim.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>

namespace epol {

PreparedGraph PreparedGraph::Prepare(SocialGraph graph, int m)
{
  if (!IsConnected(graph))
  {
    throw InvalidGraph("graph is disconnected");
  }
  auto report = CheckMBroadcasting(graph, m);
  if (!report.ok)
  {
    throw InvalidGraph("graph is not " + std::to_string(m) + "-broadcasting (source " +
                       std::to_string(*report.failing_source) + ", node " +
                       std::to_string(*report.stuck_node) + ")");
  }
  PreparedGraph p;
  p.diameter  = Diameter(graph);
  p.graph     = std::move(graph);
  p.m         = m;
  p.orderings = std::move(report.orderings);
  return p;
}

std::vector<Vote> DrawVotes(NodeId node_count, double alpha, Rng &rng)
{
  std::vector<Vote> votes(node_count);
  for (auto &v : votes)
  {
    v = Bernoulli(rng, alpha) ? Vote::kPlus : Vote::kMinus;
  }
  return votes;
}

namespace {

struct Event
{
  enum class Kind : std::uint8_t
  {
    kDeliver,
    kEmit,
    kCrash,
    kDeadline
  };

  double        time{0.0};
  std::uint64_t seq{0};
  Kind          kind{Kind::kDeliver};
  NodeId        node{0};
  Message       message;
};

struct Later
{
  bool operator()(Event const &a, Event const &b) const
  {
    return a.time != b.time ? a.time > b.time : a.seq > b.seq;
  }
};

class Engine
{
public:
  Engine(PreparedGraph const &prepared, PollConfig const &config, AdversaryModel const &adversary,
         FaultPlan const &faults, RunOptions const &options, std::uint64_t seed)
    : prepared_{prepared}
    , config_{config}
    , adversary_{adversary}
    , faults_{faults}
    , options_{options}
    , delay_rng_{MakeRng(seed, 0, "delay")}
    , loss_rng_{MakeRng(seed, 0, "loss")}
    , corrupt_rng_{MakeRng(seed, 0, "corrupt")}
    , seed_{seed}
  {}

  TrialMetrics Run(PollSetup const &setup);

private:
  NodeId size() const
  {
    return prepared_.graph.size();
  }

  void Push(double time, Event::Kind kind, NodeId node, Message const &msg = {})
  {
    queue_.push(Event{time, next_seq_++, kind, node, msg});
  }

  void Send(double now, Message const &msg)
  {
    if (faults_.l > 0.0 && Bernoulli(loss_rng_, faults_.l))
    {
      return;
    }
    double const delay = options_.min_delay + (options_.max_delay - options_.min_delay) * Uniform01(delay_rng_);
    Push(now + delay, Event::Kind::kDeliver, msg.receiver, msg);
  }

  void Broadcast(double now, NodeId n)
  {
    auto &node = nodes_[n];
    if (node.broadcast_started() || options_.stop_after_sharing)
    {
      return;
    }
    metrics_.broadcast[n]       = true;
    metrics_.broadcast_value[n] = node.collected();
    for (auto const &msg : node.StartBroadcast())
    {
      Send(now, msg);
    }
  }

  void Deliver(double now, Message const &msg);
  void ScheduleCrashes(Rng &rng);
  void Collect();

  PreparedGraph const  &prepared_;
  PollConfig const     &config_;
  AdversaryModel const &adversary_;
  FaultPlan const      &faults_;
  RunOptions const     &options_;
  Rng                   delay_rng_;
  Rng                   loss_rng_;
  Rng                   corrupt_rng_;
  std::uint64_t         seed_;

  ProtocolContext                                        ctx_;
  RoleAssignment                                         roles_;
  std::vector<NodeState>                                 nodes_;
  std::vector<bool>                                      crashed_;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::uint64_t                                          next_seq_{0};
  TrialMetrics                                           metrics_;
};

void Engine::ScheduleCrashes(Rng &rng)
{
  double const sharing_end = options_.sharing_deadline
                                ? *options_.sharing_deadline
                                : options_.max_delay + 2.0 * config_.k * options_.share_spacing;
  double const broadcast_end = sharing_end + (prepared_.diameter + 1.0) * options_.max_delay;
  for (NodeId n = 0; n < size(); ++n)
  {
    if (faults_.r <= 0.0 || (faults_.exempt_dishonest && adversary_.IsDishonest(n)))
    {
      continue;
    }
    if (!Bernoulli(rng, faults_.r))
    {
      continue;
    }
    double t = 0.0;
    if (faults_.timing == CrashTiming::kWindow)
    {
      t = Bernoulli(rng, 0.5) ? sharing_end * Uniform01(rng)
                              : sharing_end + (broadcast_end - sharing_end) * Uniform01(rng);
    }
    if (t <= 0.0)
    {
      crashed_[n] = true;
    }
    else
    {
      Push(t, Event::Kind::kCrash, n);
    }
  }
  for (auto const &[n, t] : faults_.forced_crashes)
  {
    if (n >= size())
    {
      throw InvalidParameter("forced crash of an unknown node");
    }
    if (t <= 0.0)
    {
      crashed_[n] = true;
    }
    else
    {
      Push(t, Event::Kind::kCrash, n);
    }
  }
}

void Engine::Deliver(double now, Message const &msg)
{
  NodeId const n = msg.receiver;
  if (crashed_[n])
  {
    return;
  }
  if (options_.record_trace)
  {
    metrics_.trace.push_back(TraceRecord{now, msg});
  }
  auto      &node      = nodes_[n];
  bool const dishonest = adversary_.IsDishonest(n);
  if (msg.kind == Message::Kind::kShare)
  {
    int payload = msg.value;
    if (dishonest)
    {
      if (!adversary_.IsDishonest(msg.sender))
      {
        metrics_.observations.Record(msg.sender, n, msg.value);
      }
      if (adversary_.invert)
      {
        payload = ApplyInvert(payload);
      }
    }
    node.OnShare(msg.sender, payload);
    if (node.sharing_complete())
    {
      Broadcast(now, n);
    }
    return;
  }
  std::vector<Message> out;
  if (node.OnData(msg.sender, msg.source, msg.value, out) == DataStatus::kOutOfRange)
  {
    ++metrics_.detection_events;
  }
  for (auto &fwd : out)
  {
    if (dishonest)
    {
      fwd.value = CorruptForward(adversary_, config_.k, fwd.value, corrupt_rng_);
    }
    Send(now, fwd);
  }
}

TrialMetrics Engine::Run(PollSetup const &setup)
{
  NodeId const n = size();
  if (config_.m != prepared_.m)
  {
    throw InvalidParameter("poll m differs from the m the graph was prepared for");
  }
  if (config_.k < 0 || config_.gamma.size() != static_cast<std::size_t>(config_.k + 1))
  {
    throw InvalidParameter("gamma must have k+1 entries");
  }
  if (!adversary_.coalition.empty() && adversary_.coalition.size() != n)
  {
    throw InvalidParameter("coalition vector does not match the graph size");
  }
  if (faults_.r < 0 || faults_.r > 1 || faults_.l < 0 || faults_.l > 1)
  {
    throw InvalidParameter("r and l must lie in [0,1]");
  }
  if (options_.strict_pg3 && !adversary_.coalition.empty() &&
      !CheckPg3(prepared_.graph, prepared_.m, adversary_.coalition, prepared_.orderings))
  {
    throw InvalidGraph("coalition violates the P_g3 condition");
  }

  // votes: honest ones drawn, coalition members credited with the nominal vote
  auto vote_rng = MakeRng(seed_, 0, "votes");
  auto votes    = setup.votes ? *setup.votes : DrawVotes(n, config_.alpha, vote_rng);
  if (votes.size() != n)
  {
    throw InvalidParameter("vote vector does not match the graph size");
  }
  for (NodeId x = 0; x < n; ++x)
  {
    if (adversary_.IsDishonest(x))
    {
      votes[x] = adversary_.nominal_vote;
    }
  }

  if (setup.roles)
  {
    roles_ = *setup.roles;
    ValidateRoles(prepared_.graph, config_.k, roles_);
  }
  else
  {
    auto        role_rng = MakeRng(seed_, 0, "roles");
    RoleOptions ro;
    if (adversary_.overshare && !adversary_.coalition.empty())
    {
      ro.forced_index.resize(n);
      for (NodeId x = 0; x < n; ++x)
      {
        if (adversary_.IsDishonest(x))
        {
          ro.forced_index[x] = config_.k;
        }
      }
    }
    roles_ = AssignRoles(prepared_.graph, config_.k, config_.gamma, role_rng, ro);
  }

  ctx_ = ProtocolContext{&prepared_.graph, &prepared_.orderings, &roles_,
                         ProtocolParams{config_.k, config_.m, config_.early_decision}};
  nodes_.clear();
  nodes_.reserve(n);
  for (NodeId x = 0; x < n; ++x)
  {
    nodes_.emplace_back(ctx_, x, votes[x]);
  }
  crashed_.assign(n, false);
  metrics_                 = TrialMetrics{};
  metrics_.votes           = votes;
  metrics_.share_index     = roles_.share_index;
  metrics_.broadcast.assign(n, false);
  metrics_.broadcast_value.assign(n, 0);
  for (NodeId x = 0; x < n; ++x)
  {
    metrics_.truth += ToInt(votes[x]);
  }

  auto fault_rng = MakeRng(seed_, 0, "faults");
  ScheduleCrashes(fault_rng);

  auto share_rng = MakeRng(seed_, 0, "shares");
  for (NodeId x = 0; x < n; ++x)
  {
    if (crashed_[x])
    {
      continue;
    }
    std::vector<Message> shares;
    if (adversary_.IsDishonest(x) && adversary_.overshare)
    {
      shares = nodes_[x].SendShares(std::vector<int>(roles_.consumers[x].size(), -1));
    }
    else
    {
      shares = nodes_[x].SharingPhase(share_rng);
    }
    for (std::size_t j = 0; j < shares.size(); ++j)
    {
      if (options_.share_spacing > 0.0 && j > 0)
      {
        Push(options_.share_spacing * static_cast<double>(j), Event::Kind::kEmit, x, shares[j]);
      }
      else
      {
        Send(0.0, shares[j]);
      }
    }
    if (nodes_[x].sharing_complete())
    {
      Broadcast(0.0, x);
    }
    if (options_.sharing_deadline)
    {
      Push(*options_.sharing_deadline, Event::Kind::kDeadline, x);
    }
  }

  double now = 0.0;
  while (!queue_.empty())
  {
    Event ev = queue_.top();
    queue_.pop();
    now = ev.time;
    ++metrics_.events;
    switch (ev.kind)
    {
    case Event::Kind::kDeliver:
      Deliver(now, ev.message);
      break;
    case Event::Kind::kEmit:
      if (!crashed_[ev.node])
      {
        Send(now, ev.message);
      }
      break;
    case Event::Kind::kCrash:
      crashed_[ev.node] = true;
      break;
    case Event::Kind::kDeadline:
      if (!crashed_[ev.node])
      {
        Broadcast(now, ev.node);
      }
      break;
    }
  }
  metrics_.end_time = now;
  Collect();
  return std::move(metrics_);
}

void Engine::Collect()
{
  NodeId const n = size();
  metrics_.nodes.resize(n);
  metrics_.decisions.assign(static_cast<std::size_t>(n) * n, DecisionState::kPending);
  metrics_.terminated = true;
  for (NodeId x = 0; x < n; ++x)
  {
    auto const &node = nodes_[x];
    auto       &nm   = metrics_.nodes[x];
    nm.crashed            = crashed_[x];
    nm.dishonest          = adversary_.IsDishonest(x);
    nm.counters           = node.counters();
    nm.storage_high_water = node.storage_high_water();
    nm.decided            = node.decided_count();
    nm.partial_result     = node.PartialResult();
    if (node.ready())
    {
      nm.result = node.Aggregate();
    }
    for (NodeId s = 0; s < n; ++s)
    {
      if (s == x)
      {
        continue;
      }
      auto &state = metrics_.decisions[static_cast<std::size_t>(x) * n + s];
      if (auto h = node.decided(s))
      {
        state = metrics_.broadcast[s] && *h == metrics_.broadcast_value[s] ? DecisionState::kCorrect
                                                                           : DecisionState::kWrong;
      }
      else if (node.undecidable(s))
      {
        state = DecisionState::kUndecidable;
      }
      if (nm.dishonest)
      {
        continue;
      }
      if (state == DecisionState::kUndecidable)
      {
        ++metrics_.decision_failures;
      }
      if (state == DecisionState::kWrong && !adversary_.IsDishonest(s))
      {
        ++metrics_.wrong_decisions;
      }
    }
    if (nm.dishonest || nm.crashed)
    {
      continue;
    }
    if (!nm.result)
    {
      metrics_.terminated = false;
      continue;
    }
    metrics_.max_impact = std::max(metrics_.max_impact, std::abs(*nm.result - metrics_.truth));
  }
}

}  // namespace

TrialMetrics RunPoll(PreparedGraph const &prepared, PollConfig const &config,
                     AdversaryModel const &adversary, FaultPlan const &faults,
                     RunOptions const &options, std::uint64_t seed, PollSetup const &setup)
{
  Engine engine{prepared, config, adversary, faults, options, seed};
  return engine.Run(setup);
}

TrialMetrics RunPoll(SocialGraph const &graph, PollConfig const &config, AdversaryModel const &adversary,
                     FaultPlan const &faults, std::uint64_t seed)
{
  auto prepared = PreparedGraph::Prepare(graph, config.m);
  return RunPoll(prepared, config, adversary, faults, RunOptions{}, seed);
}

}  // namespace epol
