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

#include "epol/disclosure_model.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace epol {
namespace {

Rational R(long long num, long long den = 1)
{
  return Rational{num, den};
}

TEST(DisclosureModelTest, CertainMatchesClosedForm)
{
  DisclosureQuery const q{DisclosureRule::kCertain, 0, true};
  EXPECT_EQ(BruteForceDisclosure(10, 3, UnitGamma(1, 1), q), R(1, 15));
  for (int k = 0; k <= 2; ++k)
  {
    for (int i = 0; i <= k; ++i)
    {
      for (int n = 2 * k + 1; n <= 9; n += 2)
      {
        for (int d = 0; d <= std::min(4, n); ++d)
        {
          EXPECT_EQ(BruteForceDisclosure(n, d, UnitGamma(k, i), q), PCeExact(n, d, i, R(1)))
              << n << " " << d << " " << k << " " << i;
        }
      }
    }
  }
}

TEST(DisclosureModelTest, PatternAndTupleEnumerationsAgree)
{
  Gamma const gamma{R(1, 3), R(1, 6), R(1, 2)};
  for (auto rule : {DisclosureRule::kCertain, DisclosureRule::kGreedy, DisclosureRule::kNonGreedy,
                    DisclosureRule::kCombined})
  {
    for (bool knows : {false, true})
    {
      for (int rho : {0, 1})
      {
        DisclosureQuery const q{rule, rho, knows};
        for (int d = 0; d <= 3; ++d)
        {
          EXPECT_EQ(BruteForceDisclosure(6, d, gamma, q), BruteForceDisclosureTuples(6, d, gamma, q))
              << ToString(rule) << " " << d;
        }
      }
    }
  }
}

TEST(DisclosureModelTest, SingleShareIsDOverN)
{
  for (auto rule : {DisclosureRule::kCertain, DisclosureRule::kGreedy, DisclosureRule::kNonGreedy})
  {
    EXPECT_EQ(BruteForceDisclosure(11, 4, {R(1)}, {rule, 0, false}), R(4, 11));
  }
}

TEST(DisclosureModelTest, NobodyDishonest)
{
  EXPECT_EQ(BruteForceDisclosure(8, 0, {R(1, 2), R(1, 2)}, {DisclosureRule::kCombined, 0, true}), R(0));
}

TEST(DisclosureModelTest, SizeLimits)
{
  DisclosureQuery const q{};
  EXPECT_THROW(BruteForceDisclosure(13, 2, UnitGamma(1, 1), q), SizeLimitExceeded);
  EXPECT_THROW(BruteForceDisclosure(10, 5, UnitGamma(1, 1), q), SizeLimitExceeded);
  EXPECT_THROW(BruteForceDisclosure(10, 2, UnitGamma(3, 1), q), SizeLimitExceeded);
  EXPECT_THROW(BruteForceDisclosureTuples(10, 2, UnitGamma(1, 1), q), SizeLimitExceeded);
}

TEST(DisclosureModelTest, SamplerAgreesWithEnumeration)
{
  Gamma const               gamma{R(1, 4), R(3, 4)};
  std::vector<double> const g{0.25, 0.75};
  std::size_t const         trials = 40000;
  for (auto rule : {DisclosureRule::kCertain, DisclosureRule::kGreedy, DisclosureRule::kNonGreedy})
  {
    DisclosureQuery const q{rule, 0, true};
    double const          exact = ToDouble(BruteForceDisclosure(10, 3, gamma, q));
    double const          est   = EstimateDisclosure(10, 3, g, q, trials, 99);
    double const          sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(trials));
    EXPECT_NEAR(est, exact, 4 * sigma + 1e-9) << ToString(rule);
  }
  EXPECT_EQ(EstimateDisclosure(10, 3, g, {}, 1000, 5), EstimateDisclosure(10, 3, g, {}, 1000, 5));
}

}  // namespace
}  // namespace epol
