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

#include "epol/adversary.hpp"
#include "epol/analysis.hpp"
#include "epol/rng.hpp"

#include <cstdint>
#include <vector>

namespace epol {

// Population model behind the disclosure probabilities: a target sending
// 2i+1 shares (i drawn from gamma) picks its consumers uniformly among N
// nodes, D of which are dishonest, and the shares reach them in a uniformly
// random order.

struct DisclosureQuery
{
  DisclosureRule rule{DisclosureRule::kCertain};
  int            rho{0};
  bool           knows_i{true};
};

/// Exact probability of a correct verdict, by enumerating every
/// honest/dishonest pattern of the consumer slots (weighted by the number of
/// consumer tuples producing it), every share placement and both votes.
/// Limited to N <= 12, D <= 4, k <= 2.
Rational BruteForceDisclosure(int n, int d, Gamma const &gamma, DisclosureQuery const &query);

/// Same quantity by literal enumeration of ordered consumer tuples; only for
/// very small N.
Rational BruteForceDisclosureTuples(int n, int d, Gamma const &gamma, DisclosureQuery const &query);

/// One draw of the population model: whether the coalition's verdict on the
/// target is correct.
bool SampleDisclosure(int n, int d, std::vector<double> const &gamma, DisclosureQuery const &query,
                      Rng &rng);

/// Fraction of correct verdicts over `trials` draws from a derived stream.
double EstimateDisclosure(int n, int d, std::vector<double> const &gamma, DisclosureQuery const &query,
                          std::size_t trials, std::uint64_t seed);

}  // namespace epol
