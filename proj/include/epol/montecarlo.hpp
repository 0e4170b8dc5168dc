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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace epol {

/// Welford mean/variance accumulator with an associative merge.
class RunningStat
{
public:
  void Add(double x)
  {
    ++count_;
    double const delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
    min_ = count_ == 1 ? x : std::min(min_, x);
    max_ = count_ == 1 ? x : std::max(max_, x);
  }

  void Merge(RunningStat const &other)
  {
    if (other.count_ == 0)
    {
      return;
    }
    if (count_ == 0)
    {
      *this = other;
      return;
    }
    auto const   n     = static_cast<double>(count_ + other.count_);
    double const delta = other.mean_ - mean_;
    mean_ += delta * static_cast<double>(other.count_) / n;
    m2_ += other.m2_ + delta * delta * static_cast<double>(count_) * static_cast<double>(other.count_) / n;
    count_ += other.count_;
    min_ = std::min(min_, other.min_);
    max_ = std::max(max_, other.max_);
  }

  std::size_t count() const noexcept
  {
    return count_;
  }

  double mean() const noexcept
  {
    return mean_;
  }

  double variance() const noexcept
  {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }

  double stderr_mean() const noexcept
  {
    return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
  }

  /// Half-width of a normal 95% interval.
  double ci95() const noexcept
  {
    return 1.96 * stderr_mean();
  }

  double min() const noexcept
  {
    return min_;
  }

  double max() const noexcept
  {
    return max_;
  }

private:
  std::size_t count_{0};
  double      mean_{0.0};
  double      m2_{0.0};
  double      min_{0.0};
  double      max_{0.0};
};

/// Evaluates fn(trial) for trial = 0..count-1 on up to `jobs` threads and
/// returns the results in trial order, so the output does not depend on the
/// thread count.
template <typename Result>
std::vector<Result> RunTrials(std::size_t count, unsigned jobs, std::function<Result(std::size_t)> const &fn)
{
  std::vector<Result> out(count);
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1)
  {
    for (std::size_t t = 0; t < count; ++t)
    {
      out[t] = fn(t);
    }
    return out;
  }
  std::exception_ptr       error;
  std::mutex               error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w)
  {
    workers.emplace_back([&, w] {
      try
      {
        for (std::size_t t = w; t < count; t += jobs)
        {
          out[t] = fn(t);
        }
      }
      catch (...)
      {
        std::lock_guard<std::mutex> lock{error_mutex};
        if (!error)
        {
          error = std::current_exception();
        }
      }
    });
  }
  for (auto &th : workers)
  {
    th.join();
  }
  if (error)
  {
    std::rethrow_exception(error);
  }
  return out;
}

}  // namespace epol
