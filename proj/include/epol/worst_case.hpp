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

#include "epol/sim.hpp"

#include <cstdint>
#include <vector>

namespace epol {

struct WorstCaseResult
{
  long long           max_bias{0};  // truth minus the lowest honest result
  std::vector<NodeId> coalition;    // placement achieving it
  std::size_t         placements{0};
  std::size_t         skipped{0};   // placements where the crafted roles were infeasible
};

/// Searches coalition placements of size d. For each placement the roles are
/// crafted so that every coalition member is the single consumer of 2k+1
/// honest one-share producers voting +1; members overshare and invert. Every
/// placement is tried when there are at most max_placements of them,
/// otherwise max_placements random ones.
WorstCaseResult WorstCaseImpactSearch(PreparedGraph const &prepared, int k, int d, std::uint64_t seed,
                                      std::size_t max_placements = 256);

}  // namespace epol
