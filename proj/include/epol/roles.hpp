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

#include <optional>
#include <vector>

namespace epol {

/// Consumer/producer assignment. consumers[n] is the ordered list S_n,
/// producers[n] the sorted set R_n.
struct RoleAssignment
{
  std::vector<int>                 share_index;
  std::vector<std::vector<NodeId>> consumers;
  std::vector<std::vector<NodeId>> producers;

  bool operator==(RoleAssignment const &) const = default;
};

struct RoleOptions
{
  int max_redraws{1000};
  /// Per-node override of i_n (e.g. a coalition member that always uses 2k+1
  /// consumers). Empty or nullopt entries are drawn from gamma.
  std::vector<std::optional<int>> forced_index;
};

/// Draws i_n from gamma, picks a uniform 2i_n+1 subset of neighbours as S_n and
/// repairs producer overload (|R_u| > 2k+1) by augmenting paths. Redraws the
/// i_n vector when repair is impossible.
RoleAssignment AssignRoles(SocialGraph const &graph, int k, std::vector<double> const &gamma,
                           Rng &rng, RoleOptions const &options = {});

/// Keeps the given consumer lists and adds consumers until every node p has
/// 2*index[p]+1 of them, without exceeding 2k+1 producers anywhere. Entries
/// of partial may be dropped when a cap is already exceeded.
RoleAssignment CompleteRoles(SocialGraph const &graph, int k, std::vector<int> const &index,
                             std::vector<std::vector<NodeId>> partial, Rng &rng);

/// Derives producers and share indices from explicit consumer lists.
RoleAssignment RolesFromConsumers(SocialGraph const &graph,
                                  std::vector<std::vector<NodeId>> consumers);

/// Throws InvalidParameter describing the first violated role invariant.
void ValidateRoles(SocialGraph const &graph, int k, RoleAssignment const &roles);

/// The closed-form assignment of the circle family:
/// S_n = {n-1, n+1, ..., n+2k}, R_n = {n+1, n-1, ..., n-2k}.
RoleAssignment CircleRoles(int n, int k);

}  // namespace epol
