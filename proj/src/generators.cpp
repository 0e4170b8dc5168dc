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

#include "epol/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace epol {

SocialGraph GenerateLayered(std::vector<int> const &layer_sizes, int m)
{
  if (layer_sizes.empty())
  {
    throw InvalidParameter("layered graph needs at least one layer");
  }
  if (m < 1)
  {
    throw InvalidParameter("m must be at least 1");
  }
  for (int s : layer_sizes)
  {
    if (s < m)
    {
      throw InvalidParameter("layer of size " + std::to_string(s) + " is smaller than m");
    }
  }
  int const   total = std::accumulate(layer_sizes.begin(), layer_sizes.end(), 0);
  SocialGraph g{static_cast<NodeId>(total)};
  NodeId      offset = 0;
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l)
  {
    NodeId const next = offset + static_cast<NodeId>(layer_sizes[l]);
    for (NodeId u = offset; u < next; ++u)
    {
      for (NodeId v = next; v < next + static_cast<NodeId>(layer_sizes[l + 1]); ++v)
      {
        g.AddEdge(u, v);
      }
    }
    offset = next;
  }
  if (!IsConnected(g))
  {
    throw InvalidGraph("single layer with more than one node is disconnected");
  }
  return g;
}

SocialGraph GenerateBackbone(int backbone_size, std::vector<int> const &attachments, int m, Rng *rng)
{
  if (m < 1 || backbone_size < m)
  {
    throw InvalidParameter("backbone must have at least m nodes");
  }
  auto const  outer = static_cast<NodeId>(attachments.size());
  auto const  b     = static_cast<NodeId>(backbone_size);
  SocialGraph g{b + outer};
  for (NodeId u = 0; u < b; ++u)
  {
    for (NodeId v = u + 1; v < b; ++v)
    {
      g.AddEdge(u, v);
    }
  }
  std::vector<NodeId> pool(b);
  std::iota(pool.begin(), pool.end(), NodeId{0});
  for (NodeId j = 0; j < outer; ++j)
  {
    int const a = attachments[j];
    if (a < m || a > backbone_size)
    {
      throw InvalidParameter("outer node attachment count must lie in [m, backbone size]");
    }
    if (rng != nullptr)
    {
      std::shuffle(pool.begin(), pool.end(), *rng);
      for (int t = 0; t < a; ++t)
      {
        g.AddEdge(b + j, pool[static_cast<std::size_t>(t)]);
      }
    }
    else
    {
      for (int t = 0; t < a; ++t)
      {
        g.AddEdge(b + j, (j + static_cast<NodeId>(t)) % b);
      }
    }
  }
  if (!IsConnected(g))
  {
    throw InvalidGraph("backbone graph is disconnected");
  }
  return g;
}

SocialGraph GenerateGeometric1d(std::vector<double> const &positions, double threshold, int m)
{
  if (!std::is_sorted(positions.begin(), positions.end()))
  {
    throw InvalidParameter("positions must be sorted");
  }
  if (m < 1 || !(threshold > 0.0))
  {
    throw InvalidParameter("m must be >= 1 and threshold positive");
  }
  auto const  n = static_cast<NodeId>(positions.size());
  SocialGraph g{n};
  for (NodeId u = 0; u < n; ++u)
  {
    for (NodeId v = u + 1; v < n && positions[v] - positions[u] < threshold; ++v)
    {
      g.AddEdge(u, v);
    }
  }
  for (NodeId u = 0; u < n; ++u)
  {
    if (g.degree(u) < static_cast<std::size_t>(m))
    {
      throw InvalidParameter("node " + std::to_string(u) + " has fewer than m neighbours");
    }
  }
  if (!IsConnected(g))
  {
    throw InvalidGraph("geometric graph is disconnected");
  }
  return g;
}

SocialGraph GenerateClique(int n)
{
  if (n < 1)
  {
    throw InvalidParameter("clique needs at least one node");
  }
  SocialGraph g{static_cast<NodeId>(n)};
  for (NodeId u = 0; u < g.size(); ++u)
  {
    for (NodeId v = u + 1; v < g.size(); ++v)
    {
      g.AddEdge(u, v);
    }
  }
  return g;
}

int PerfectSquareRoot(int n)
{
  if (n < 0)
  {
    return -1;
  }
  auto r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  while (r * r > n)
  {
    --r;
  }
  while ((r + 1) * (r + 1) <= n)
  {
    ++r;
  }
  return r * r == n ? r : -1;
}

SocialGraph GenerateClusterRing(int n, int k)
{
  if (k < 0)
  {
    throw InvalidParameter("k must be non-negative");
  }
  int const r = PerfectSquareRoot(n);
  if (r < 0)
  {
    throw InvalidParameter(std::to_string(n) + " is not a perfect square");
  }
  if (r < 2 || r < 2 * k + 1)
  {
    throw InvalidParameter("group size sqrt(N) must be at least max(2, 2k+1)");
  }
  auto const  ur = static_cast<NodeId>(r);
  SocialGraph g{static_cast<NodeId>(n)};
  for (NodeId grp = 0; grp < ur; ++grp)
  {
    NodeId const base = grp * ur;
    NodeId const next = ((grp + 1) % ur) * ur;
    for (NodeId j = 0; j < ur; ++j)
    {
      for (NodeId i = j + 1; i < ur; ++i)
      {
        g.AddEdge(base + j, base + i);
      }
      for (NodeId t = 0; t <= static_cast<NodeId>(2 * k); ++t)
      {
        g.AddEdge(base + j, next + (j + t) % ur);
      }
    }
  }
  return g;
}

SocialGraph GenerateCircle(int n, int k)
{
  if (k < 0 || n <= 2 * k + 1)
  {
    throw InvalidParameter("circle graph needs N > 2k+1");
  }
  auto const  un = static_cast<NodeId>(n);
  SocialGraph g{un};
  for (NodeId u = 0; u < un; ++u)
  {
    for (NodeId t = 1; t <= static_cast<NodeId>(2 * k); ++t)
    {
      g.AddEdge(u, (u + t) % un);
    }
  }
  if (k == 0)
  {
    // f(n) = {n-1}: the map still links every node to its predecessor.
    for (NodeId u = 0; u < un; ++u)
    {
      g.AddEdge(u, (u + un - 1) % un);
    }
  }
  return g;
}

}  // namespace epol
