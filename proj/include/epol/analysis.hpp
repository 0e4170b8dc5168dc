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
#include "epol/rational.hpp"

#include <utility>
#include <vector>

namespace epol {

/// gamma[i] is the fraction of nodes sending 2i+1 shares.
using Gamma = std::vector<Rational>;

/// Throws InvalidParameter unless entries are in [0,1] and sum to one.
void ValidateGamma(Gamma const &gamma);

/// Unit vector e_i of length k+1.
Gamma UnitGamma(int k, int i);

// Certain disclosure of a node sending 2i+1 shares.
Rational PCeExact(int n, int d, int i, Rational const &gamma_i);
Rational PCeBound(int n, int d, int i, Rational const &gamma_i);
/// Population average over i.
Rational PCeTotal(int n, int d, Gamma const &gamma);

// Greedy disclosure with threshold rho+1.
Rational PGrExact(int n, int d, int rho, Gamma const &gamma);
Rational PGrBound(int n, int d, int rho, Gamma const &gamma);

// Non-greedy (majority) disclosure.
Rational PUnExact(int n, int d, Gamma const &gamma);
/// Throws InvalidParameter when D/N >= 1/2.
Rational PUnBound(int n, int d, Gamma const &gamma);

Rational PCom(int n, int d, int rho, Gamma const &gamma);

long long MaxImpact(int k, int d);
/// Average impact of a single dishonest node.
Rational AvgImpact(Gamma const &gamma, Rational const &alpha);

struct Interval
{
  Rational lo;
  Rational hi;

  bool Contains(Rational const &x) const
  {
    return lo <= x && x <= hi;
  }
};

Interval BiasedResultRange(int n, int d, int k, Rational const &alpha);
Rational BiasedResultAll2k1(int n, int d, int k, Rational const &alpha);

/// floor((m-1) * diameter / 2)
long long Tolerance(int m, int diameter);

/// N exp(-2/(N-1) (m diameter / 2 - D)^2); requires D < m diameter / 2.
double WrongDecisionBound(int n, int m, int diameter, int d);

struct ComplexityBounds
{
  long long spatial;  // 2(2k+1) + d_n + N + m(N-1) + (N-1)
  long long message;  // (2k+1) + d_n + (N-1)(d_n - m)
};

ComplexityBounds ComputeComplexityBounds(int k, int m, int n, int degree);

/// q = r + (1 - r) l
Rational LossProbability(Rational const &r, Rational const &l);
double   LossProbability(double r, double l);

struct FailProbabilities
{
  std::vector<double> z;  // probability that a live node fails to decide h[source]
  std::vector<double> e;  // probability that a node's copy does not reach a given neighbour
};

/// Evaluates the crash/loss recursion for one source in rank order.
/// producer_count is |R_s|; decide_threshold is the number of relayed copies
/// a non-neighbour needs (m without early decision).
FailProbabilities ComputeFailProbabilities(SocialGraph const &graph, SourceOrdering const &ordering,
                                           double r, double l, int producer_count,
                                           int decide_threshold);

/// Probability that fewer than `threshold` of independent events succeed.
double PoissonBinomialBelow(std::vector<double> const &success, int threshold);

constexpr long long CrashImpactBound(int k)
{
  return 3LL * k + 2;
}

}  // namespace epol
