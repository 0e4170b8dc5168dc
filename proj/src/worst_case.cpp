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

#include "epol/worst_case.hpp"
#include "epol/rational.hpp"

#include <algorithm>
#include <numeric>

namespace epol {
namespace {

bool NextCombination(std::vector<NodeId> &comb, NodeId n)
{
  auto const r = comb.size();
  for (std::size_t i = r; i-- > 0;)
  {
    if (comb[i] < n - r + i)
    {
      ++comb[i];
      for (std::size_t j = i + 1; j < r; ++j)
      {
        comb[j] = comb[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

std::optional<RoleAssignment> CraftRoles(SocialGraph const &graph, int k, std::vector<bool> const &bad,
                                         Rng &rng)
{
  NodeId const                     n = graph.size();
  std::vector<int>                 index(n, 0);
  std::vector<std::vector<NodeId>> partial(n);
  for (NodeId u = 0; u < n; ++u)
  {
    if (!bad[u])
    {
      continue;
    }
    index[u]  = k;
    int taken = 0;
    for (NodeId h : graph.neighbors(u))
    {
      if (taken == 2 * k + 1)
      {
        break;
      }
      if (!bad[h] && partial[h].empty())
      {
        partial[h].push_back(u);
        ++taken;
      }
    }
    if (taken < 2 * k + 1)
    {
      return std::nullopt;
    }
  }
  try
  {
    auto roles = CompleteRoles(graph, k, index, std::move(partial), rng);
    for (NodeId u = 0; u < n; ++u)
    {
      if (!bad[u])
      {
        continue;
      }
      auto const &r = roles.producers[u];
      if (r.size() != static_cast<std::size_t>(2 * k + 1) ||
          std::any_of(r.begin(), r.end(), [&bad](NodeId p) { return bad[p]; }))
      {
        return std::nullopt;
      }
    }
    return roles;
  }
  catch (AssignmentInfeasible const &)
  {
    return std::nullopt;
  }
}

}  // namespace

WorstCaseResult WorstCaseImpactSearch(PreparedGraph const &prepared, int k, int d, std::uint64_t seed,
                                      std::size_t max_placements)
{
  NodeId const n = prepared.graph.size();
  if (d < 0 || static_cast<NodeId>(d) > n)
  {
    throw InvalidParameter("coalition size outside [0, N]");
  }
  WorstCaseResult best;
  if (d == 0)
  {
    return best;
  }

  std::vector<std::vector<NodeId>> placements;
  BigInt const                     total = Binomial(n, d);
  if (total <= max_placements)
  {
    std::vector<NodeId> comb(static_cast<std::size_t>(d));
    std::iota(comb.begin(), comb.end(), NodeId{0});
    do
    {
      placements.push_back(comb);
    } while (NextCombination(comb, n));
  }
  else
  {
    auto rng = MakeRng(seed, 0, "placements");
    for (std::size_t p = 0; p < max_placements; ++p)
    {
      placements.push_back(AdversaryModel{RandomCoalition(n, static_cast<std::size_t>(d), rng)}.Members());
    }
  }

  PollConfig config;
  config.k     = k;
  config.m     = prepared.m;
  config.gamma = std::vector<double>(static_cast<std::size_t>(k + 1), 0.0);
  config.gamma.front() = 1.0;
  std::vector<Vote> votes(n, Vote::kPlus);

  for (std::size_t p = 0; p < placements.size(); ++p)
  {
    auto adversary = MakeCoalition(n, placements[p]);
    auto rng       = MakeRng(seed, p, "craft");
    auto roles     = CraftRoles(prepared.graph, k, adversary.coalition, rng);
    if (!roles)
    {
      ++best.skipped;
      continue;
    }
    ++best.placements;
    PollSetup setup{votes, std::move(*roles)};
    auto      metrics = RunPoll(prepared, config, adversary, FaultPlan{}, RunOptions{}, DeriveSeed(seed, p, "run"), setup);
    for (auto const &node : metrics.nodes)
    {
      if (!node.dishonest && node.result)
      {
        long long const bias = metrics.truth - *node.result;
        if (bias > best.max_bias || best.coalition.empty())
        {
          best.max_bias  = std::max(best.max_bias, bias);
          best.coalition = placements[p];
        }
      }
    }
  }
  return best;
}

}  // namespace epol
