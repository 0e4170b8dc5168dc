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
#include "epol/protocol.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace epol {
namespace {

int CheckedK(Gamma const &gamma)
{
  ValidateGamma(gamma);
  return static_cast<int>(gamma.size()) - 1;
}

/// Verdict on a single target whose shares landed on `dishonest_slots`.
bool Judge(std::vector<int> const &shares, std::vector<bool> const &dishonest_slot, Vote vote, int i, int k,
           DisclosureQuery const &query)
{
  ObservationLog log;
  for (std::size_t j = 0; j < shares.size(); ++j)
  {
    if (dishonest_slot[j])
    {
      log.Record(0, static_cast<NodeId>(j + 1), shares[j]);
    }
  }
  DisclosureTargets targets{{vote}, {i}, {true}};
  return Disclose(query.rule, log, targets, k, query.rho, query.knows_i).verdicts[0].correct;
}

/// All share vectors of a node voting `vote` with 2i+1 shares, one per
/// placement of the i+1 copies of the vote.
std::vector<std::vector<int>> Placements(Vote vote, int i)
{
  int const                     slots = 2 * i + 1;
  std::vector<std::vector<int>> out;
  std::vector<int>              base(static_cast<std::size_t>(slots), -ToInt(vote));
  std::fill_n(base.begin(), i + 1, ToInt(vote));
  std::sort(base.begin(), base.end());
  do
  {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

BigInt Falling(long long n, long long r)
{
  if (r > n)
  {
    return 0;
  }
  BigInt acc = 1;
  for (long long j = 0; j < r; ++j)
  {
    acc *= n - j;
  }
  return acc;
}

}  // namespace

Rational BruteForceDisclosure(int n, int d, Gamma const &gamma, DisclosureQuery const &query)
{
  int const k = CheckedK(gamma);
  if (n > 12 || d > 4 || k > 2)
  {
    throw SizeLimitExceeded("brute force limited to N <= 12, D <= 4, k <= 2");
  }
  if (n < 2 * k + 1 || d < 0 || d > n)
  {
    throw InvalidParameter("need N >= 2k+1 and 0 <= D <= N");
  }
  Rational total = 0;
  for (int i = 0; i <= k; ++i)
  {
    auto const &g = gamma[static_cast<std::size_t>(i)];
    if (g == 0)
    {
      continue;
    }
    int const slots = 2 * i + 1;
    BigInt    hits  = 0;
    BigInt    cases = 0;
    for (Vote vote : {Vote::kPlus, Vote::kMinus})
    {
      auto const placements = Placements(vote, i);
      for (unsigned mask = 0; mask < (1U << static_cast<unsigned>(slots)); ++mask)
      {
        std::vector<bool> dishonest(static_cast<std::size_t>(slots));
        int               j = 0;
        for (int b = 0; b < slots; ++b)
        {
          dishonest[static_cast<std::size_t>(b)] = ((mask >> static_cast<unsigned>(b)) & 1U) != 0U;
          j += dishonest[static_cast<std::size_t>(b)] ? 1 : 0;
        }
        // ordered consumer tuples realising this pattern
        BigInt const tuples = Falling(d, j) * Falling(n - d, slots - j);
        for (auto const &shares : placements)
        {
          cases += tuples;
          if (tuples != 0 && Judge(shares, dishonest, vote, i, k, query))
          {
            hits += tuples;
          }
        }
      }
    }
    total += g * Rational{hits, cases};
  }
  return total;
}

Rational BruteForceDisclosureTuples(int n, int d, Gamma const &gamma, DisclosureQuery const &query)
{
  int const k = CheckedK(gamma);
  if (n > 9 || k > 2)
  {
    throw SizeLimitExceeded("tuple enumeration limited to N <= 9, k <= 2");
  }
  Rational total = 0;
  for (int i = 0; i <= k; ++i)
  {
    auto const &g = gamma[static_cast<std::size_t>(i)];
    if (g == 0)
    {
      continue;
    }
    auto const        slots = static_cast<std::size_t>(2 * i + 1);
    long long         hits  = 0;
    long long         cases = 0;
    std::vector<int>  tuple(slots, 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    // depth-first enumeration of ordered tuples of distinct labels
    std::function<void(std::size_t)> walk = [&](std::size_t depth) {
      if (depth == slots)
      {
        std::vector<bool> dishonest(slots);
        for (std::size_t s = 0; s < slots; ++s)
        {
          dishonest[s] = tuple[s] < d;
        }
        for (Vote vote : {Vote::kPlus, Vote::kMinus})
        {
          for (auto const &shares : Placements(vote, i))
          {
            ++cases;
            hits += Judge(shares, dishonest, vote, i, k, query) ? 1 : 0;
          }
        }
        return;
      }
      for (int label = 0; label < n; ++label)
      {
        if (!used[static_cast<std::size_t>(label)])
        {
          used[static_cast<std::size_t>(label)] = true;
          tuple[depth]                          = label;
          walk(depth + 1);
          used[static_cast<std::size_t>(label)] = false;
        }
      }
    };
    walk(0);
    total += g * Rational{hits, cases};
  }
  return total;
}

bool SampleDisclosure(int n, int d, std::vector<double> const &gamma, DisclosureQuery const &query, Rng &rng)
{
  int const k = static_cast<int>(gamma.size()) - 1;
  int const i = static_cast<int>(SampleIndex(rng, gamma.data(), gamma.size()));
  auto const slots = static_cast<std::size_t>(2 * i + 1);
  if (static_cast<std::size_t>(n) < slots)
  {
    throw InvalidParameter("population smaller than the share count");
  }
  // partial Fisher-Yates: first `slots` labels of a random permutation
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<bool> dishonest(slots);
  for (std::size_t s = 0; s < slots; ++s)
  {
    auto const pick = static_cast<std::size_t>(UniformInt(rng, static_cast<std::int64_t>(s), n - 1));
    std::swap(labels[s], labels[pick]);
    dishonest[s] = labels[s] < d;
  }
  Vote const vote   = Bernoulli(rng, 0.5) ? Vote::kPlus : Vote::kMinus;
  auto       shares = GenerateShares(vote, i, k, rng);
  return Judge(shares, dishonest, vote, i, k, query);
}

double EstimateDisclosure(int n, int d, std::vector<double> const &gamma, DisclosureQuery const &query,
                          std::size_t trials, std::uint64_t seed)
{
  auto        rng  = MakeRng(seed, static_cast<std::uint64_t>(n) * 1000 + static_cast<std::uint64_t>(d), "disclosure");
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t)
  {
    hits += SampleDisclosure(n, d, gamma, query, rng) ? 1 : 0;
  }
  return trials > 0 ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0;
}

}  // namespace epol
