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

#include "epol/roles.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace epol {
namespace {

bool Contains(std::vector<NodeId> const &v, NodeId x)
{
  return std::find(v.begin(), v.end(), x) != v.end();
}

void Erase(std::vector<NodeId> &v, NodeId x)
{
  v.erase(std::find(v.begin(), v.end(), x));
}

class Repairer
{
public:
  Repairer(SocialGraph const &g, std::size_t cap, Rng &rng,
           std::vector<std::vector<NodeId>> &consumers)
    : graph_{g}
    , cap_{cap}
    , rng_{rng}
    , consumers_{consumers}
    , producers_(g.size())
  {
    for (NodeId p = 0; p < g.size(); ++p)
    {
      for (NodeId u : consumers_[p])
      {
        producers_[u].push_back(p);
      }
    }
  }

  /// Sheds overload, then fills every missing slot (need[p] - |S_p|) via
  /// augmenting paths.
  bool Run(std::vector<int> const &need)
  {
    std::vector<NodeId> deficit;
    for (NodeId p = 0; p < graph_.size(); ++p)
    {
      for (auto c = static_cast<int>(consumers_[p].size()); c < need[p]; ++c)
      {
        deficit.push_back(p);
      }
    }
    for (NodeId u = 0; u < graph_.size(); ++u)
    {
      auto &ru = producers_[u];
      if (ru.size() <= cap_)
      {
        continue;
      }
      std::shuffle(ru.begin(), ru.end(), rng_);
      while (ru.size() > cap_)
      {
        NodeId p = ru.back();
        ru.pop_back();
        Erase(consumers_[p], u);
        deficit.push_back(p);
      }
    }
    std::shuffle(deficit.begin(), deficit.end(), rng_);
    for (NodeId p : deficit)
    {
      if (!Augment(p))
      {
        return false;
      }
    }
    return true;
  }

private:
  struct Step
  {
    NodeId from;      // producer that takes over `consumer`
    NodeId consumer;  // released by the current producer
  };

  bool Augment(NodeId start)
  {
    std::vector<std::optional<Step>> parent(graph_.size());
    std::vector<bool>                seen(graph_.size(), false);
    std::deque<NodeId>               queue{start};
    seen[start] = true;
    while (!queue.empty())
    {
      NodeId p = queue.front();
      queue.pop_front();
      std::vector<NodeId> nbrs = graph_.neighbors(p);
      std::shuffle(nbrs.begin(), nbrs.end(), rng_);
      for (NodeId u : nbrs)
      {
        if (Contains(consumers_[p], u))
        {
          continue;
        }
        if (producers_[u].size() < cap_)
        {
          Take(p, u);
          for (NodeId cur = p; cur != start;)
          {
            Step s = *parent[cur];
            Release(cur, s.consumer);
            Take(s.from, s.consumer);
            cur = s.from;
          }
          return true;
        }
        for (NodeId q : producers_[u])
        {
          if (!seen[q])
          {
            seen[q]   = true;
            parent[q] = Step{p, u};
            queue.push_back(q);
          }
        }
      }
    }
    return false;
  }

  void Take(NodeId p, NodeId u)
  {
    consumers_[p].push_back(u);
    producers_[u].push_back(p);
  }

  void Release(NodeId p, NodeId u)
  {
    Erase(consumers_[p], u);
    Erase(producers_[u], p);
  }

  SocialGraph const                &graph_;
  std::size_t                       cap_;
  Rng                              &rng_;
  std::vector<std::vector<NodeId>> &consumers_;
  std::vector<std::vector<NodeId>>  producers_;
};

}  // namespace

RoleAssignment RolesFromConsumers(SocialGraph const &graph,
                                  std::vector<std::vector<NodeId>> consumers)
{
  NodeId const n = graph.size();
  if (consumers.size() != n)
  {
    throw InvalidParameter("need one consumer list per node");
  }
  RoleAssignment roles;
  roles.share_index.resize(n);
  roles.producers.resize(n);
  for (NodeId p = 0; p < n; ++p)
  {
    if (consumers[p].size() % 2 == 0)
    {
      throw InvalidParameter("node " + std::to_string(p) + " has an even number of consumers");
    }
    roles.share_index[p] = static_cast<int>(consumers[p].size() / 2);
    for (NodeId u : consumers[p])
    {
      if (!graph.HasEdge(p, u))
      {
        throw InvalidParameter("consumer is not a neighbour");
      }
      roles.producers[u].push_back(p);
    }
  }
  for (auto &r : roles.producers)
  {
    std::sort(r.begin(), r.end());
  }
  roles.consumers = std::move(consumers);
  return roles;
}

void ValidateRoles(SocialGraph const &graph, int k, RoleAssignment const &roles)
{
  NodeId const n = graph.size();
  if (roles.consumers.size() != n || roles.producers.size() != n || roles.share_index.size() != n)
  {
    throw InvalidParameter("role vectors do not match the graph size");
  }
  auto const cap = static_cast<std::size_t>(2 * k + 1);
  for (NodeId p = 0; p < n; ++p)
  {
    int const i = roles.share_index[p];
    if (i < 0 || i > k || roles.consumers[p].size() != static_cast<std::size_t>(2 * i + 1))
    {
      throw InvalidParameter("node " + std::to_string(p) + " has |S_n| != 2i+1 or i outside [0,k]");
    }
    std::vector<NodeId> s = roles.consumers[p];
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
    {
      throw InvalidParameter("duplicate consumer at node " + std::to_string(p));
    }
    for (NodeId u : s)
    {
      if (!graph.HasEdge(p, u))
      {
        throw InvalidParameter("consumer is not a neighbour of node " + std::to_string(p));
      }
      if (!std::binary_search(roles.producers[u].begin(), roles.producers[u].end(), p))
      {
        throw InvalidParameter("producer/consumer relation is not mutual");
      }
    }
    if (roles.producers[p].size() > cap)
    {
      throw InvalidParameter("node " + std::to_string(p) + " has more than 2k+1 producers");
    }
    for (NodeId q : roles.producers[p])
    {
      if (!Contains(roles.consumers[q], p))
      {
        throw InvalidParameter("producer/consumer relation is not mutual");
      }
    }
  }
}

RoleAssignment AssignRoles(SocialGraph const &graph, int k, std::vector<double> const &gamma,
                           Rng &rng, RoleOptions const &options)
{
  if (k < 0 || gamma.size() != static_cast<std::size_t>(k + 1))
  {
    throw InvalidParameter("gamma must have k+1 entries");
  }
  NodeId const n   = graph.size();
  auto const   cap = static_cast<std::size_t>(2 * k + 1);
  if (graph.min_degree() < cap)
  {
    throw InvalidGraph("minimum degree is below 2k+1");
  }
  auto forced = [&options](NodeId x) -> std::optional<int> {
    return x < options.forced_index.size() ? options.forced_index[x] : std::nullopt;
  };
  for (int redraw = 0; redraw < options.max_redraws; ++redraw)
  {
    std::vector<int>                 index(n);
    std::vector<std::vector<NodeId>> consumers(n);
    for (NodeId p = 0; p < n; ++p)
    {
      auto f   = forced(p);
      index[p] = f ? *f : static_cast<int>(SampleIndex(rng, gamma.data(), gamma.size()));
      if (index[p] < 0 || index[p] > k)
      {
        throw InvalidParameter("forced share index outside [0,k]");
      }
      std::vector<NodeId> nbrs = graph.neighbors(p);
      std::shuffle(nbrs.begin(), nbrs.end(), rng);
      nbrs.resize(static_cast<std::size_t>(2 * index[p] + 1));
      consumers[p] = std::move(nbrs);
    }
    Repairer repair{graph, cap, rng, consumers};
    std::vector<int> need(n);
    for (NodeId p = 0; p < n; ++p)
    {
      need[p] = 2 * index[p] + 1;
    }
    if (!repair.Run(need))
    {
      continue;
    }
    for (auto &s : consumers)
    {
      std::shuffle(s.begin(), s.end(), rng);
    }
    return RolesFromConsumers(graph, std::move(consumers));
  }
  throw AssignmentInfeasible("no consumer assignment respecting |R_n| <= 2k+1 found after " +
                             std::to_string(options.max_redraws) + " redraws");
}

RoleAssignment CompleteRoles(SocialGraph const &graph, int k, std::vector<int> const &index,
                             std::vector<std::vector<NodeId>> partial, Rng &rng)
{
  NodeId const n = graph.size();
  if (index.size() != n || partial.size() != n)
  {
    throw InvalidParameter("need one share index and one partial list per node");
  }
  std::vector<int> need(n);
  for (NodeId p = 0; p < n; ++p)
  {
    if (index[p] < 0 || index[p] > k || partial[p].size() > static_cast<std::size_t>(2 * index[p] + 1))
    {
      throw InvalidParameter("partial consumer list exceeds 2i+1 at node " + std::to_string(p));
    }
    need[p] = 2 * index[p] + 1;
  }
  Repairer repair{graph, static_cast<std::size_t>(2 * k + 1), rng, partial};
  if (!repair.Run(need))
  {
    throw AssignmentInfeasible("partial assignment cannot be completed");
  }
  return RolesFromConsumers(graph, std::move(partial));
}

RoleAssignment CircleRoles(int n, int k)
{
  if (k < 0 || n <= 2 * k + 1)
  {
    throw InvalidParameter("circle roles need N > 2k+1");
  }
  auto const                       un = static_cast<NodeId>(n);
  std::vector<std::vector<NodeId>> consumers(un);
  RoleAssignment                   roles;
  roles.share_index.assign(un, k);
  roles.producers.resize(un);
  for (NodeId u = 0; u < un; ++u)
  {
    consumers[u].push_back((u + un - 1) % un);
    for (NodeId t = 1; t <= static_cast<NodeId>(2 * k); ++t)
    {
      consumers[u].push_back((u + t) % un);
    }
    roles.producers[u].push_back((u + 1) % un);
    for (NodeId t = 1; t <= static_cast<NodeId>(2 * k); ++t)
    {
      roles.producers[u].push_back((u + un - t) % un);
    }
    std::sort(roles.producers[u].begin(), roles.producers[u].end());
  }
  roles.consumers = std::move(consumers);
  return roles;
}

}  // namespace epol
