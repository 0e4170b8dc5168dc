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

#include <vector>

namespace epol {

/// Layers of nodes; every node is linked to every node of the adjacent layers.
SocialGraph GenerateLayered(std::vector<int> const &layer_sizes, int m);

/// A clique of backbone_size nodes plus one outer node per entry of
/// attachments, each linked to that many backbone nodes. Without an rng the
/// outer node j attaches to backbone nodes j, j+1, ... (mod backbone_size).
SocialGraph GenerateBackbone(int backbone_size, std::vector<int> const &attachments, int m,
                             Rng *rng = nullptr);

/// Nodes on a line; u ~ v iff |pos_u - pos_v| < threshold.
SocialGraph GenerateGeometric1d(std::vector<double> const &positions, double threshold, int m);

/// sqrt(N) cliques arranged in a ring; node j of group g links to nodes
/// (j + t) mod r, t = 0..2k, of group g + 1.
SocialGraph GenerateClusterRing(int n, int k);

/// Circulant graph where n is linked to n±1, ..., n±2k (mod N).
SocialGraph GenerateCircle(int n, int k);

/// Complete graph on n nodes.
SocialGraph GenerateClique(int n);

/// Integer square root if n is a perfect square, otherwise -1.
int PerfectSquareRoot(int n);

}  // namespace epol
