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
#include "epol/generators.hpp"
#include "epol/rational.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace epol {
namespace {

using namespace oracle;

Rational R(long long num, long long den = 1)
{
  return Rational{num, den};
}

TEST(RationalTest, ParseAndFormat)
{
  EXPECT_EQ(ParseRational("0.1"), R(1, 10));
  EXPECT_EQ(ParseRational("-3/6"), R(-1, 2));
  EXPECT_EQ(ParseRational("2e-2"), R(1, 50));
  EXPECT_EQ(ParseRational("1.5E1"), R(15));
  EXPECT_EQ(ParseRational(" 7 "), R(7));
  EXPECT_THROW(ParseRational("abc"), InvalidParameter);
  EXPECT_THROW(ParseRational("1/0"), InvalidParameter);
  EXPECT_EQ(ParseRationalList("0,1/4,0.75"), (std::vector<Rational>{R(0), R(1, 4), R(3, 4)}));
  EXPECT_EQ(ToFraction(R(2, 30)), "1/15");
  EXPECT_EQ(ToDecimal(R(1, 15)), "0.0666666666667");
  EXPECT_EQ(ToDecimal(R(0)), "0");
  EXPECT_DOUBLE_EQ(ToDouble(R(1, 4)), 0.25);
}

TEST(RationalTest, Binomial)
{
  EXPECT_EQ(Binomial(10, 2), 45);
  EXPECT_EQ(Binomial(5, 0), 1);
  EXPECT_EQ(Binomial(5, 7), 0);
  EXPECT_EQ(Binomial(-1, 0), 0);
  EXPECT_EQ(Binomial(100, 50), BigInt{"100891344545564193334812497256"});
}

TEST(AnalysisTest, GammaValidation)
{
  EXPECT_NO_THROW(ValidateGamma({R(1, 3), R(2, 3)}));
  EXPECT_THROW(ValidateGamma({R(1, 3), R(1, 3)}), InvalidParameter);
  EXPECT_THROW(ValidateGamma({R(-1), R(2)}), InvalidParameter);
  EXPECT_THROW(ValidateGamma({}), InvalidParameter);
  EXPECT_EQ(UnitGamma(2, 1), (Gamma{R(0), R(1), R(0)}));
}

TEST(AnalysisTest, CertainExamples)
{
  EXPECT_EQ(PCeExact(10, 3, 1, R(1)), R(1, 15));
  EXPECT_EQ(PCeExact(10, 0, 1, R(1)), R(0));
  EXPECT_EQ(PCeBound(100, 20, 3, R(1)), R(16, 10000));
  EXPECT_EQ(PCeTotal(10, 3, {R(0), R(1)}), R(1, 15));
  // k=0: the only share lands on a dishonest node with probability D/N
  EXPECT_EQ(PCeTotal(50, 7, {R(1)}), R(7, 50));
}

TEST(AnalysisTest, BoundsDominateExactValues)
{
  for (int k = 0; k <= 3; ++k)
  {
    for (int n : {10, 25, 100})
    {
      for (int d = 0; d <= n / 2; ++d)
      {
        Gamma gamma(static_cast<std::size_t>(k + 1), R(1, k + 1));
        for (int i = 0; i <= k; ++i)
        {
          EXPECT_LE(PCeExact(n, d, i, R(1)), PCeBound(n, d, i, R(1)));
        }
        for (int rho = 0; rho <= k; ++rho)
        {
          EXPECT_LE(PGrExact(n, d, rho, gamma), PGrBound(n, d, rho, gamma)) << n << " " << d;
        }
        if (2 * d < n)
        {
          EXPECT_LE(PUnExact(n, d, gamma), PUnBound(n, d, gamma)) << n << " " << d;
        }
      }
    }
  }
}

TEST(AnalysisTest, MonotoneInCoalitionSize)
{
  Gamma gamma{R(1, 4), R(1, 4), R(1, 2)};
  for (int d = 1; d <= 30; ++d)
  {
    EXPECT_LE(PCeTotal(60, d - 1, gamma), PCeTotal(60, d, gamma));
    EXPECT_LE(PGrExact(60, d - 1, 1, gamma), PGrExact(60, d, 1, gamma));
    EXPECT_LE(PUnExact(60, d - 1, gamma), PUnExact(60, d, gamma));
    EXPECT_LE(PCom(60, d - 1, 1, gamma), PCom(60, d, 1, gamma));
  }
}

TEST(AnalysisTest, SingleShareCollapsesToDOverN)
{
  for (int d = 0; d <= 10; ++d)
  {
    EXPECT_EQ(PGrExact(40, d, 0, {R(1)}), R(d, 40));
    EXPECT_EQ(PUnExact(40, d, {R(1)}), R(d, 40));
    EXPECT_EQ(PCom(40, d, 0, {R(1)}), R(d, 40));
  }
}

TEST(AnalysisTest, ParameterErrors)
{
  EXPECT_THROW(PCeExact(10, 11, 0, R(1)), InvalidParameter);
  EXPECT_THROW(PGrExact(10, 2, 2, {R(0), R(1)}), InvalidParameter);
  EXPECT_THROW(PUnBound(10, 5, {R(1)}), InvalidParameter);
  EXPECT_THROW(AvgImpact({R(1)}, R(2)), InvalidParameter);
  EXPECT_THROW(MaxImpact(-1, 1), InvalidParameter);
  EXPECT_THROW(Tolerance(0, 3), InvalidParameter);
  EXPECT_THROW(LossProbability(R(3, 2), R(0)), InvalidParameter);
}

TEST(AnalysisTest, Impact)
{
  EXPECT_EQ(MaxImpact(1, 1), 10);
  EXPECT_EQ(MaxImpact(2, 3), 48);
  EXPECT_EQ(MaxImpact(1, 0), 0);
  for (int k = 0; k <= 4; ++k)
  {
    for (auto alpha : {R(0), R(3, 5), R(1)})
    {
      EXPECT_EQ(AvgImpact(UnitGamma(k, k), alpha), 2 * (2 * k + alpha + 1));
    }
  }
  // direct evaluation of the share-count argument for a mixed gamma
  Gamma const  gamma{R(1, 2), R(1, 2)};
  double const alpha  = 0.7;
  double const shares = 0.5 * 1 + 0.5 * 3;
  double const plus   = 0.5 * (0 + alpha) / 1 + 0.5 * (1 + alpha) / 3;
  EXPECT_NEAR(ToDouble(AvgImpact(gamma, R(7, 10))), shares + 2 * shares * plus + 1, 1e-12);
}

TEST(AnalysisTest, BiasedRange)
{
  auto range = BiasedResultRange(100, 10, 1, R(3, 5));
  EXPECT_EQ(range.lo, R(-80));
  EXPECT_EQ(range.hi, R(20));
  auto const mid = BiasedResultAll2k1(100, 10, 1, R(3, 5));
  EXPECT_EQ(mid, R(20) - R(72));
  EXPECT_TRUE(range.Contains(mid));
  EXPECT_FALSE(range.Contains(R(21)));
}

TEST(AnalysisTest, ToleranceAndWrongDecisions)
{
  EXPECT_EQ(Tolerance(3, 2), 2);
  EXPECT_EQ(Tolerance(1, 5), 0);
  EXPECT_EQ(Tolerance(4, 5), 7);
  double prev = 0.0;
  for (int d = 0; d < 15; ++d)
  {
    double const b = WrongDecisionBound(100, 3, 10, d);
    EXPECT_GT(b, prev);
    prev = b;
  }
  EXPECT_NEAR(WrongDecisionBound(100, 3, 10, 0), 100 * std::exp(-2.0 / 99 * 225), 1e-12);
  EXPECT_THROW(WrongDecisionBound(100, 3, 10, 15), InvalidParameter);
}

TEST(AnalysisTest, ComplexityBounds)
{
  auto b = ComputeComplexityBounds(1, 3, 10, 4);
  EXPECT_EQ(b.spatial, 6 + 4 + 10 + 27 + 9);
  EXPECT_EQ(b.message, 3 + 4 + 9);
}

TEST(AnalysisTest, LossProbability)
{
  EXPECT_EQ(LossProbability(R(1, 10), R(1, 10)), R(19, 100));
  EXPECT_DOUBLE_EQ(LossProbability(0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(LossProbability(1.0, 0.3), 1.0);
}

TEST(AnalysisTest, PoissonBinomialAgainstEnumeration)
{
  Rng rng{31};
  for (int rep = 0; rep < 200; ++rep)
  {
    std::vector<double> p(static_cast<std::size_t>(UniformInt(rng, 0, 10)));
    for (auto &x : p)
    {
      x = Uniform01(rng);
    }
    int const t = UniformInt(rng, 0, 12);
    EXPECT_NEAR(PoissonBinomialBelow(p, t), EnumerateBelow(p, t), 1e-12);
  }
}

TEST(AnalysisTest, FailProbabilities)
{
  auto       g        = GenerateLayered({3, 3, 3}, 3);
  auto const ordering = *ComputeOrdering(g, 0, 3).ordering;

  auto none = ComputeFailProbabilities(g, ordering, 0.0, 0.0, 3, 3);
  for (NodeId n = 0; n < g.size(); ++n)
  {
    EXPECT_EQ(none.z[n], 0.0);
    EXPECT_EQ(none.e[n], 0.0);
  }
  auto all = ComputeFailProbabilities(g, ordering, 1.0, 0.0, 3, 3);
  for (NodeId n = 0; n < g.size(); ++n)
  {
    EXPECT_EQ(all.e[n], 1.0);
  }

  double const r = 0.1;
  double const l = 0.05;
  auto         f = ComputeFailProbabilities(g, ordering, r, l, 3, 3);
  double const q = r + (1 - r) * l;
  // literal sum over how many of the three shares go missing
  double zs = 0.0;
  for (int j = 1; j <= 3; ++j)
  {
    zs += ToDouble(Rational{Binomial(3, j)}) * std::pow(q, j) * std::pow(1 - q, 3 - j);
  }
  EXPECT_NEAR(f.z[0], zs, 1e-15);
  double const es = r + (1 - r) * (zs + (1 - zs) * l);
  EXPECT_NEAR(f.e[0], es, 1e-15);
  for (NodeId n = 0; n < g.size(); ++n)
  {
    if (g.HasEdge(0, n))
    {
      EXPECT_NEAR(f.z[n], es, 1e-15);
    }
    else if (n != 0)
    {
      std::vector<double> succ;
      for (NodeId p : ordering.preceding[n])
      {
        succ.push_back(1 - f.e[p]);
      }
      EXPECT_NEAR(f.z[n], EnumerateBelow(succ, 3), 1e-12);
      EXPECT_GT(f.z[n], f.z[0]);
    }
  }
}

TEST(AnalysisTest, CrashImpactBound)
{
  static_assert(CrashImpactBound(0) == 2);
  EXPECT_EQ(CrashImpactBound(2), 8);
}

}  // namespace
}  // namespace epol
