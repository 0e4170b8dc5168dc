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

#include <cstdint>
#include <random>
#include <string_view>

namespace epol {

using Rng = std::mt19937_64;

constexpr std::uint64_t kDefaultSeed = 20150601ULL;

constexpr std::uint64_t SplitMix64(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

/// Seed for an independent stream identified by (master, index, tag).
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index, std::string_view tag);

inline Rng MakeRng(std::uint64_t master, std::uint64_t index, std::string_view tag)
{
  return Rng{DeriveSeed(master, index, tag)};
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double Uniform01(Rng &rng)
{
  return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

inline bool Bernoulli(Rng &rng, double p)
{
  return Uniform01(rng) < p;
}

/// Uniform integer in [lo, hi].
inline std::int64_t UniformInt(Rng &rng, std::int64_t lo, std::int64_t hi)
{
  return std::uniform_int_distribution<std::int64_t>{lo, hi}(rng);
}

/// Index drawn from a discrete distribution given by non-negative weights.
std::size_t SampleIndex(Rng &rng, const double *weights, std::size_t count);

}  // namespace epol
