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

#include "epol/types.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace epol {

using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph over node ids 0..N-1 with sorted adjacency lists.
class SocialGraph
{
public:
  SocialGraph() = default;
  explicit SocialGraph(NodeId node_count);

  /// Builds a graph from an edge list. Self-loops, duplicates and out of range
  /// ids are rejected with InvalidGraph.
  static SocialGraph FromEdges(NodeId node_count, std::vector<Edge> const &edges);

  /// Inserts {u, v}. Returns false if the edge already existed.
  bool AddEdge(NodeId u, NodeId v);

  NodeId size() const noexcept
  {
    return static_cast<NodeId>(adjacency_.size());
  }

  std::size_t edge_count() const noexcept
  {
    return edge_count_;
  }

  std::vector<NodeId> const &neighbors(NodeId n) const
  {
    return adjacency_.at(n);
  }

  std::size_t degree(NodeId n) const
  {
    return adjacency_.at(n).size();
  }

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool        HasEdge(NodeId u, NodeId v) const;

  /// Edges as (u, v) pairs with u < v, in lexicographic order.
  std::vector<Edge> Edges() const;

  bool operator==(SocialGraph const &other) const = default;

private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t                      edge_count_{0};
};

constexpr int kUnreachable = -1;

/// BFS hop distances from source; kUnreachable for nodes in other components.
std::vector<int> Distances(SocialGraph const &graph, NodeId source);

bool IsConnected(SocialGraph const &graph);

/// Exact diameter via BFS from every node. Throws InvalidGraph when disconnected.
int Diameter(SocialGraph const &graph);

/// Largest BFS depth from source (the radius of the source's broadcast).
int Eccentricity(SocialGraph const &graph, NodeId source);

/// A total order of the nodes for broadcasting the data of one source.
struct SourceOrdering
{
  NodeId                           source{0};
  std::vector<NodeId>              order;       // order[r] is the node of rank r
  std::vector<NodeId>              rank;        // inverse of order
  std::vector<std::vector<NodeId>> preceding;   // neighbours ranked before n
  std::vector<std::vector<NodeId>> succeeding;  // neighbours ranked after n

  std::size_t beta(NodeId n) const
  {
    return preceding.at(n).size();
  }

  bool Precedes(NodeId a, NodeId b) const
  {
    return rank.at(a) < rank.at(b);
  }
};

/// Wraps a rank order (order[0] must be the source) and derives the
/// preceding/succeeding neighbour sets. Throws InvalidParameter if order is not
/// a permutation starting with source.
SourceOrdering MakeOrdering(SocialGraph const &graph, NodeId source, std::vector<NodeId> order);

/// True iff every node other than the source is adjacent to it or has at
/// least m preceding neighbours.
bool IsWitness(SocialGraph const &graph, SourceOrdering const &ordering, int m);

struct OrderingOutcome
{
  std::optional<SourceOrdering> ordering;
  std::optional<NodeId>         stuck_node;  // set when no ordering exists

  bool ok() const
  {
    return ordering.has_value();
  }
};

OrderingOutcome ComputeOrdering(SocialGraph const &graph, NodeId source, int m);

struct BroadcastReport
{
  bool                        ok{false};
  std::vector<SourceOrdering> orderings;  // one per source when ok
  std::optional<NodeId>       failing_source;
  std::optional<NodeId>       stuck_node;
};

BroadcastReport CheckMBroadcasting(SocialGraph const &graph, int m);

/// True iff for every source s and every n outside Γ(s) ∪ {s}, fewer than m/2
/// of n's preceding neighbours belong to the coalition.
bool CheckPg3(SocialGraph const &graph, int m, std::vector<bool> const &coalition,
              std::vector<SourceOrdering> const &orderings);

/// Adds edges so that the given order certifies m-broadcasting for order[0].
/// Returns the augmented graph; the input is not modified.
SocialGraph MakeMBroadcasting(SocialGraph const &graph, int m, std::vector<NodeId> const &order);

}  // namespace epol
