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
#include <stdexcept>
#include <string>

namespace epol {

using NodeId = std::uint32_t;

/// A participant's opinion. The only two legal values are -1 and +1.
enum class Vote : std::int8_t
{
  kMinus = -1,
  kPlus  = 1
};

constexpr int ToInt(Vote v) noexcept
{
  return static_cast<int>(v);
}

constexpr Vote Opposite(Vote v) noexcept
{
  return v == Vote::kPlus ? Vote::kMinus : Vote::kPlus;
}

constexpr Vote VoteFromSign(int x) noexcept
{
  return x < 0 ? Vote::kMinus : Vote::kPlus;
}

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument is outside the operation's domain.
class InvalidParameter : public Error
{
public:
  using Error::Error;
};

/// The graph does not satisfy a structural requirement (connectivity, degree).
class InvalidGraph : public Error
{
public:
  using Error::Error;
};

/// Consumer/producer roles could not be drawn within the retry budget.
class AssignmentInfeasible : public Error
{
public:
  using Error::Error;
};

/// Aggregation was requested before every source had been decided.
class NotReady : public Error
{
public:
  using Error::Error;
};

/// Exhaustive enumeration was requested beyond its feasibility limits.
class SizeLimitExceeded : public Error
{
public:
  using Error::Error;
};

}  // namespace epol
