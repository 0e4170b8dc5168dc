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

#include "epol/rng.hpp"

#include <stdexcept>

namespace epol {

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index, std::string_view tag)
{
  // FNV-1a over the tag, then mix everything through splitmix.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag)
  {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t s = SplitMix64(master);
  s               = SplitMix64(s ^ index);
  return SplitMix64(s ^ h);
}

std::size_t SampleIndex(Rng &rng, const double *weights, std::size_t count)
{
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i)
  {
    total += weights[i];
  }
  if (!(total > 0.0))
  {
    throw std::invalid_argument("SampleIndex: weights sum to zero");
  }
  double x = Uniform01(rng) * total;
  for (std::size_t i = 0; i < count; ++i)
  {
    if (x < weights[i])
    {
      return i;
    }
    x -= weights[i];
  }
  // rounding: fall back to the last index with positive weight
  for (std::size_t i = count; i-- > 0;)
  {
    if (weights[i] > 0.0)
    {
      return i;
    }
  }
  return 0;
}

}  // namespace epol
