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

#include "epol/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

namespace epol {

SocialGraph::SocialGraph(NodeId node_count)
  : adjacency_(node_count)
{}

SocialGraph SocialGraph::FromEdges(NodeId node_count, std::vector<Edge> const &edges)
{
  SocialGraph g{node_count};
  for (auto const &[u, v] : edges)
  {
    if (!g.AddEdge(u, v))
    {
      throw InvalidGraph("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  return g;
}

bool SocialGraph::AddEdge(NodeId u, NodeId v)
{
  if (u >= size() || v >= size())
  {
    throw InvalidGraph("edge endpoint out of range");
  }
  if (u == v)
  {
    throw InvalidGraph("self-loop at node " + std::to_string(u));
  }
  auto &au = adjacency_[u];
  auto  it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v)
  {
    return false;
  }
  au.insert(it, v);
  auto &av = adjacency_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
  return true;
}

std::size_t SocialGraph::min_degree() const
{
  std::size_t d = adjacency_.empty() ? 0 : adjacency_.front().size();
  for (auto const &a : adjacency_)
  {
    d = std::min(d, a.size());
  }
  return d;
}

std::size_t SocialGraph::max_degree() const
{
  std::size_t d = 0;
  for (auto const &a : adjacency_)
  {
    d = std::max(d, a.size());
  }
  return d;
}

bool SocialGraph::HasEdge(NodeId u, NodeId v) const
{
  if (u >= size() || v >= size())
  {
    return false;
  }
  auto const &a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> SocialGraph::Edges() const
{
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < size(); ++u)
  {
    for (NodeId v : adjacency_[u])
    {
      if (u < v)
      {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

std::vector<int> Distances(SocialGraph const &graph, NodeId source)
{
  std::vector<int> dist(graph.size(), kUnreachable);
  std::deque<NodeId> queue{source};
  dist.at(source) = 0;
  while (!queue.empty())
  {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : graph.neighbors(u))
    {
      if (dist[v] == kUnreachable)
      {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool IsConnected(SocialGraph const &graph)
{
  if (graph.size() == 0)
  {
    return true;
  }
  auto d = Distances(graph, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

int Eccentricity(SocialGraph const &graph, NodeId source)
{
  auto d = Distances(graph, source);
  int  e = 0;
  for (int x : d)
  {
    if (x == kUnreachable)
    {
      throw InvalidGraph("graph is disconnected");
    }
    e = std::max(e, x);
  }
  return e;
}

int Diameter(SocialGraph const &graph)
{
  int diam = 0;
  for (NodeId s = 0; s < graph.size(); ++s)
  {
    diam = std::max(diam, Eccentricity(graph, s));
  }
  return diam;
}

SourceOrdering MakeOrdering(SocialGraph const &graph, NodeId source, std::vector<NodeId> order)
{
  NodeId const n = graph.size();
  if (order.size() != n || n == 0 || order.front() != source)
  {
    throw InvalidParameter("ordering must list every node once, source first");
  }
  SourceOrdering o;
  o.source = source;
  o.rank.assign(n, n);
  for (NodeId r = 0; r < n; ++r)
  {
    NodeId x = order[r];
    if (x >= n || o.rank[x] != n)
    {
      throw InvalidParameter("ordering is not a permutation");
    }
    o.rank[x] = r;
  }
  o.order = std::move(order);
  o.preceding.resize(n);
  o.succeeding.resize(n);
  for (NodeId u = 0; u < n; ++u)
  {
    for (NodeId v : graph.neighbors(u))
    {
      (o.rank[v] < o.rank[u] ? o.preceding[u] : o.succeeding[u]).push_back(v);
    }
    auto by_rank = [&o](NodeId a, NodeId b) { return o.rank[a] < o.rank[b]; };
    std::sort(o.preceding[u].begin(), o.preceding[u].end(), by_rank);
    std::sort(o.succeeding[u].begin(), o.succeeding[u].end(), by_rank);
  }
  return o;
}

bool IsWitness(SocialGraph const &graph, SourceOrdering const &ordering, int m)
{
  for (NodeId n = 0; n < graph.size(); ++n)
  {
    if (n == ordering.source || graph.HasEdge(n, ordering.source))
    {
      continue;
    }
    if (ordering.beta(n) < static_cast<std::size_t>(m))
    {
      return false;
    }
  }
  return true;
}

OrderingOutcome ComputeOrdering(SocialGraph const &graph, NodeId source, int m)
{
  if (m < 1)
  {
    throw InvalidParameter("m must be at least 1");
  }
  NodeId const n = graph.size();
  if (source >= n)
  {
    throw InvalidParameter("source out of range");
  }

  // Greedy closure: repeatedly place the smallest (distance, id) node that is
  // adjacent to the source or already has m placed neighbours. Placing a node
  // never invalidates another node's eligibility, so this finds an ordering
  // whenever one exists.
  auto dist = Distances(graph, source);
  auto key  = [&dist](NodeId x) {
    return std::make_pair(dist[x] == kUnreachable ? std::numeric_limits<int>::max() : dist[x], x);
  };
  using Key = std::pair<int, NodeId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;

  std::vector<int>  placed_neighbors(n, 0);
  std::vector<bool> placed(n, false);
  std::vector<bool> queued(n, false);
  std::vector<NodeId> order;
  order.reserve(n);

  ready.push(key(source));
  queued[source] = true;
  for (NodeId v : graph.neighbors(source))
  {
    ready.push(key(v));
    queued[v] = true;
  }
  while (!ready.empty())
  {
    NodeId u = ready.top().second;
    ready.pop();
    placed[u] = true;
    order.push_back(u);
    for (NodeId v : graph.neighbors(u))
    {
      if (++placed_neighbors[v] >= m && !queued[v])
      {
        queued[v] = true;
        ready.push(key(v));
      }
    }
  }

  OrderingOutcome out;
  if (order.size() == n)
  {
    out.ordering = MakeOrdering(graph, source, std::move(order));
    return out;
  }
  std::optional<Key> first;
  for (NodeId x = 0; x < n; ++x)
  {
    if (!placed[x] && (!first || key(x) < *first))
    {
      first = key(x);
    }
  }
  out.stuck_node = first->second;
  return out;
}

BroadcastReport CheckMBroadcasting(SocialGraph const &graph, int m)
{
  BroadcastReport report;
  report.orderings.reserve(graph.size());
  for (NodeId s = 0; s < graph.size(); ++s)
  {
    auto outcome = ComputeOrdering(graph, s, m);
    if (!outcome.ok())
    {
      report.orderings.clear();
      report.failing_source = s;
      report.stuck_node     = outcome.stuck_node;
      return report;
    }
    report.orderings.push_back(std::move(*outcome.ordering));
  }
  report.ok = true;
  return report;
}

bool CheckPg3(SocialGraph const &graph, int m, std::vector<bool> const &coalition,
              std::vector<SourceOrdering> const &orderings)
{
  for (auto const &o : orderings)
  {
    for (NodeId n = 0; n < graph.size(); ++n)
    {
      if (n == o.source || graph.HasEdge(n, o.source))
      {
        continue;
      }
      int bad = 0;
      for (NodeId p : o.preceding[n])
      {
        bad += coalition.at(p) ? 1 : 0;
      }
      if (2 * bad >= m)
      {
        return false;
      }
    }
  }
  return true;
}

SocialGraph MakeMBroadcasting(SocialGraph const &graph, int m, std::vector<NodeId> const &order)
{
  NodeId const n = graph.size();
  if (m < 1 || static_cast<NodeId>(m) > n - 1)
  {
    throw InvalidParameter("m must lie in [1, N-1]");
  }
  // validates the permutation
  auto const  check = MakeOrdering(graph, order.at(0), order);
  SocialGraph out   = graph;
  NodeId const source = order[0];

  for (NodeId r = 1; r <= static_cast<NodeId>(m); ++r)
  {
    out.AddEdge(source, order[r]);
  }
  for (NodeId r = static_cast<NodeId>(m) + 1; r < n; ++r)
  {
    NodeId const u       = order[r];
    int          earlier = 0;
    for (NodeId v : out.neighbors(u))
    {
      earlier += check.rank[v] < r ? 1 : 0;
    }
    for (NodeId j = 0; j < r && earlier < m; ++j)
    {
      if (out.AddEdge(order[j], u))
      {
        ++earlier;
      }
    }
  }
  return out;
}

}  // namespace epol
