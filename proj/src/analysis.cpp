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

#include "epol/analysis.hpp"
#include "epol/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace epol {
namespace {

Rational Power(Rational const &base, int e)
{
  Rational acc = 1;
  for (int i = 0; i < e; ++i)
  {
    acc *= base;
  }
  return acc;
}

Rational Ratio(BigInt const &num, BigInt const &den)
{
  if (den == 0)
  {
    throw InvalidParameter("binomial denominator vanishes");
  }
  return Rational{num, den};
}

void CheckPopulation(int n, int d)
{
  if (n < 1 || d < 0 || d > n)
  {
    throw InvalidParameter("need N >= 1 and 0 <= D <= N");
  }
}

int MaxIndex(Gamma const &gamma)
{
  ValidateGamma(gamma);
  return static_cast<int>(gamma.size()) - 1;
}

}  // namespace

void ValidateGamma(Gamma const &gamma)
{
  if (gamma.empty())
  {
    throw InvalidParameter("gamma must have at least one entry");
  }
  Rational sum = 0;
  for (auto const &g : gamma)
  {
    if (g < 0 || g > 1)
    {
      throw InvalidParameter("gamma entries must lie in [0,1]");
    }
    sum += g;
  }
  if (sum != 1)
  {
    throw InvalidParameter("gamma must sum to 1 (got " + ToDecimal(sum) + ")");
  }
}

Gamma UnitGamma(int k, int i)
{
  if (k < 0 || i < 0 || i > k)
  {
    throw InvalidParameter("unit gamma index outside [0,k]");
  }
  Gamma g(static_cast<std::size_t>(k + 1), Rational{0});
  g[static_cast<std::size_t>(i)] = 1;
  return g;
}

Rational PCeExact(int n, int d, int i, Rational const &gamma_i)
{
  CheckPopulation(n, d);
  if (i < 0 || n < i + 1)
  {
    throw InvalidParameter("need 0 <= i and i+1 <= N");
  }
  return gamma_i * Ratio(Binomial(d, i + 1), Binomial(n, i + 1));
}

Rational PCeBound(int n, int d, int i, Rational const &gamma_i)
{
  CheckPopulation(n, d);
  if (i < 0)
  {
    throw InvalidParameter("need i >= 0");
  }
  return gamma_i * Power(Rational{d, n}, i + 1);
}

Rational PCeTotal(int n, int d, Gamma const &gamma)
{
  int const k   = MaxIndex(gamma);
  Rational  sum = 0;
  for (int i = 0; i <= k; ++i)
  {
    if (gamma[static_cast<std::size_t>(i)] != 0)
    {
      sum += PCeExact(n, d, i, gamma[static_cast<std::size_t>(i)]);
    }
  }
  return sum;
}

Rational PGrExact(int n, int d, int rho, Gamma const &gamma)
{
  CheckPopulation(n, d);
  int const k = MaxIndex(gamma);
  if (rho < 0 || rho > k)
  {
    throw InvalidParameter("rho must lie in [0,k]");
  }
  if (n < 2 * rho + 1)
  {
    throw InvalidParameter("need N >= 2 rho + 1");
  }
  Rational weight = 0;
  for (int i = rho; i <= k; ++i)
  {
    weight += gamma[static_cast<std::size_t>(i)];
  }
  Rational inner = 0;
  for (int j = 0; j <= rho; ++j)
  {
    inner += Ratio(Binomial(d - rho - 1, j), Binomial(n, j + rho + 1));
  }
  return weight * Rational{Binomial(d, rho + 1)} * inner;
}

Rational PGrBound(int n, int d, int rho, Gamma const &gamma)
{
  CheckPopulation(n, d);
  int const k = MaxIndex(gamma);
  if (rho < 0 || rho > k)
  {
    throw InvalidParameter("rho must lie in [0,k]");
  }
  Rational weight = 0;
  for (int i = rho; i <= k; ++i)
  {
    weight += gamma[static_cast<std::size_t>(i)];
  }
  Rational const lead{n + 1, n - d + rho + 2};
  return weight * lead * Power(Rational{d, n - d + rho + 1}, rho + 1);
}

Rational PUnExact(int n, int d, Gamma const &gamma)
{
  CheckPopulation(n, d);
  int const k = MaxIndex(gamma);
  if (n < 2 * k + 1)
  {
    throw InvalidParameter("need N >= 2k+1");
  }
  Rational total = 0;
  for (int i = 0; i <= k; ++i)
  {
    auto const &g = gamma[static_cast<std::size_t>(i)];
    if (g == 0)
    {
      continue;
    }
    Rational p = 0;
    for (int j = 1; j <= i + 1; ++j)
    {
      for (int t = 0; t <= j - 1; ++t)
      {
        p += Ratio(Binomial(d, j) * Binomial(d - j, t), Binomial(n, j + t));
      }
    }
    total += g * p;
  }
  return total;
}

Rational PUnBound(int n, int d, Gamma const &gamma)
{
  CheckPopulation(n, d);
  int const      k = MaxIndex(gamma);
  Rational const a{d, n};
  if (2 * a >= 1)
  {
    throw InvalidParameter("non-greedy bound needs D/N < 1/2");
  }
  Rational tail = 0;
  for (int i = 0; i <= k; ++i)
  {
    tail += gamma[static_cast<std::size_t>(i)] * Power(2 * a, 2 * i + 1);
  }
  return a / (1 - 2 * a) * (1 - tail);
}

Rational PCom(int n, int d, int rho, Gamma const &gamma)
{
  return std::max({PCeTotal(n, d, gamma), PGrExact(n, d, rho, gamma), PUnExact(n, d, gamma)});
}

long long MaxImpact(int k, int d)
{
  if (k < 0 || d < 0)
  {
    throw InvalidParameter("k and D must be non-negative");
  }
  return (6LL * k + 4) * d;
}

Rational AvgImpact(Gamma const &gamma, Rational const &alpha)
{
  int const k = MaxIndex(gamma);
  if (alpha < 0 || alpha > 1)
  {
    throw InvalidParameter("alpha must lie in [0,1]");
  }
  Rational shares = 0;
  Rational plus   = 0;
  for (int i = 0; i <= k; ++i)
  {
    auto const &g = gamma[static_cast<std::size_t>(i)];
    shares += g * (2 * i + 1);
    plus += g * (i + alpha) / (2 * i + 1);
  }
  return shares * (1 + 2 * plus) + 1;
}

Interval BiasedResultRange(int n, int d, int k, Rational const &alpha)
{
  Rational const hi = (2 * alpha - 1) * n;
  return Interval{hi - MaxImpact(k, d), hi};
}

Rational BiasedResultAll2k1(int n, int d, int k, Rational const &alpha)
{
  return (2 * alpha - 1) * n - (4 * k + 2 * alpha + 2) * d;
}

long long Tolerance(int m, int diameter)
{
  if (m < 1 || diameter < 0)
  {
    throw InvalidParameter("need m >= 1 and a non-negative diameter");
  }
  return (static_cast<long long>(m) - 1) * diameter / 2;
}

double WrongDecisionBound(int n, int m, int diameter, int d)
{
  double const margin = 0.5 * m * diameter - d;
  if (n < 2 || !(margin > 0.0))
  {
    throw InvalidParameter("bound needs N >= 2 and D < m diameter / 2");
  }
  return n * std::exp(-2.0 / (n - 1) * margin * margin);
}

ComplexityBounds ComputeComplexityBounds(int k, int m, int n, int degree)
{
  long long const shares = 2LL * k + 1;
  return ComplexityBounds{
      2 * shares + degree + n + static_cast<long long>(m) * (n - 1) + (n - 1),
      shares + degree + static_cast<long long>(n - 1) * (degree - m)};
}

Rational LossProbability(Rational const &r, Rational const &l)
{
  if (r < 0 || r > 1 || l < 0 || l > 1)
  {
    throw InvalidParameter("r and l must lie in [0,1]");
  }
  return r + (1 - r) * l;
}

double LossProbability(double r, double l)
{
  if (r < 0 || r > 1 || l < 0 || l > 1)
  {
    throw InvalidParameter("r and l must lie in [0,1]");
  }
  return r + (1 - r) * l;
}

double PoissonBinomialBelow(std::vector<double> const &success, int threshold)
{
  if (threshold <= 0)
  {
    return 0.0;
  }
  // dist[c] = probability of exactly c successes (capped at threshold)
  std::vector<double> dist(static_cast<std::size_t>(threshold) + 1, 0.0);
  dist[0] = 1.0;
  for (double p : success)
  {
    for (std::size_t c = dist.size(); c-- > 0;)
    {
      double const stay = dist[c] * (1.0 - p);
      double const move = c > 0 ? dist[c - 1] * p : 0.0;
      if (c + 1 == dist.size())
      {
        dist[c] += move;  // absorbing "at least threshold" bucket
      }
      else
      {
        dist[c] = stay + move;
      }
    }
  }
  double below = 0.0;
  for (std::size_t c = 0; c + 1 < dist.size(); ++c)
  {
    below += dist[c];
  }
  return below;
}

FailProbabilities ComputeFailProbabilities(SocialGraph const &graph, SourceOrdering const &ordering,
                                           double r, double l, int producer_count,
                                           int decide_threshold)
{
  double const q = LossProbability(r, l);
  if (producer_count < 0 || decide_threshold < 1)
  {
    throw InvalidParameter("need |R_s| >= 0 and a positive threshold");
  }
  FailProbabilities out;
  out.z.assign(graph.size(), 0.0);
  out.e.assign(graph.size(), 0.0);
  auto const edge_fail = [r, l](double z) { return r + (1 - r) * (z + (1 - z) * l); };

  NodeId const s = ordering.source;
  // fewer than |R_s| producer shares reach the source
  out.z[s] = 1.0 - std::pow(1.0 - q, producer_count);
  out.e[s] = edge_fail(out.z[s]);
  for (std::size_t rank = 1; rank < ordering.order.size(); ++rank)
  {
    NodeId const n = ordering.order[rank];
    if (graph.HasEdge(n, s))
    {
      out.z[n] = out.e[s];
    }
    else
    {
      std::vector<double> success;
      success.reserve(ordering.preceding[n].size());
      for (NodeId p : ordering.preceding[n])
      {
        success.push_back(1.0 - out.e[p]);
      }
      out.z[n] = PoissonBinomialBelow(success, decide_threshold);
    }
    out.e[n] = edge_fail(out.z[n]);
  }
  return out;
}

}  // namespace epol
