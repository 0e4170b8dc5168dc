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

#include "epol/adversary.hpp"

#include <algorithm>
#include <numeric>

namespace epol {

std::size_t AdversaryModel::size() const
{
  return static_cast<std::size_t>(std::count(coalition.begin(), coalition.end(), true));
}

std::vector<NodeId> AdversaryModel::Members() const
{
  std::vector<NodeId> out;
  for (NodeId n = 0; n < coalition.size(); ++n)
  {
    if (coalition[n])
    {
      out.push_back(n);
    }
  }
  return out;
}

AdversaryModel MakeCoalition(NodeId node_count, std::vector<NodeId> const &members)
{
  AdversaryModel model;
  model.coalition.assign(node_count, false);
  for (NodeId n : members)
  {
    if (n >= node_count)
    {
      throw InvalidParameter("coalition member out of range");
    }
    model.coalition[n] = true;
  }
  return model;
}

std::vector<bool> RandomCoalition(NodeId node_count, std::size_t size, Rng &rng)
{
  if (size > node_count)
  {
    throw InvalidParameter("coalition larger than the population");
  }
  std::vector<NodeId> ids(node_count);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<bool> out(node_count, false);
  for (std::size_t i = 0; i < size; ++i)
  {
    out[ids[i]] = true;
  }
  return out;
}

std::vector<int> OvershareShares(int k)
{
  return std::vector<int>(static_cast<std::size_t>(2 * k + 1), -1);
}

int CorruptForward(AdversaryModel const &model, int k, int value, Rng &rng)
{
  int const bound = 2 * k + 1;
  if (model.out_of_range)
  {
    return bound + 1;
  }
  if (!model.corrupt_forward)
  {
    return value;
  }
  if (model.corrupt_mode == CorruptMode::kRandom)
  {
    return static_cast<int>(UniformInt(rng, -bound, bound));
  }
  return -bound;
}

std::string ToString(DisclosureRule rule)
{
  switch (rule)
  {
  case DisclosureRule::kCertain:
    return "certain";
  case DisclosureRule::kGreedy:
    return "greedy";
  case DisclosureRule::kNonGreedy:
    return "nongreedy";
  case DisclosureRule::kCombined:
    return "combined";
  }
  return "unknown";
}

DisclosureRule ParseDisclosureRule(std::string const &text)
{
  for (auto r : {DisclosureRule::kCertain, DisclosureRule::kGreedy, DisclosureRule::kNonGreedy,
                 DisclosureRule::kCombined})
  {
    if (ToString(r) == text)
    {
      return r;
    }
  }
  throw InvalidParameter("unknown disclosure rule '" + text + "'");
}

std::size_t DisclosureResult::revealed() const
{
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [](Verdict const &v) { return v.vote.has_value(); }));
}

std::size_t DisclosureResult::correct() const
{
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [](Verdict const &v) { return v.correct; }));
}

std::size_t DisclosureResult::certain() const
{
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [](Verdict const &v) { return v.certain; }));
}

namespace {

struct Tally
{
  int plus{0};
  int minus{0};

  int &operator[](int value)
  {
    return value > 0 ? plus : minus;
  }
};

DisclosureResult Empty(DisclosureTargets const &targets)
{
  DisclosureResult r;
  r.verdicts.resize(targets.truth.size());
  return r;
}

void Score(DisclosureResult &r, DisclosureTargets const &targets)
{
  for (std::size_t n = 0; n < r.verdicts.size(); ++n)
  {
    auto &v   = r.verdicts[n];
    v.correct = v.vote.has_value() && *v.vote == targets.truth[n];
  }
}

std::vector<Tally> TallyAll(ObservationLog const &log, std::size_t n)
{
  std::vector<Tally> t(n);
  for (auto const &o : log.entries)
  {
    ++t.at(o.producer)[o.value];
  }
  return t;
}

}  // namespace

DisclosureResult DiscloseCertain(ObservationLog const &log, DisclosureTargets const &targets, int k,
                                 bool knows_i)
{
  auto r     = Empty(targets);
  auto tally = TallyAll(log, targets.truth.size());
  for (std::size_t n = 0; n < tally.size(); ++n)
  {
    if (!targets.honest[n])
    {
      continue;
    }
    int const need = knows_i ? targets.share_index[n] + 1 : k + 1;
    if (tally[n].plus >= need)
    {
      r.verdicts[n].vote = Vote::kPlus;
    }
    else if (tally[n].minus >= need)
    {
      r.verdicts[n].vote = Vote::kMinus;
    }
    r.verdicts[n].certain = r.verdicts[n].vote.has_value();
  }
  Score(r, targets);
  return r;
}

DisclosureResult DiscloseGreedy(ObservationLog const &log, DisclosureTargets const &targets, int rho)
{
  auto               r = Empty(targets);
  std::vector<Tally> tally(targets.truth.size());
  for (auto const &o : log.entries)
  {
    auto &v = r.verdicts.at(o.producer);
    if (!targets.honest[o.producer] || v.vote)
    {
      continue;
    }
    if (++tally[o.producer][o.value] >= rho + 1)
    {
      v.vote = VoteFromSign(o.value);
    }
  }
  Score(r, targets);
  return r;
}

DisclosureResult DiscloseNonGreedy(ObservationLog const &log, DisclosureTargets const &targets)
{
  auto r     = Empty(targets);
  auto tally = TallyAll(log, targets.truth.size());
  for (std::size_t n = 0; n < tally.size(); ++n)
  {
    if (!targets.honest[n] || tally[n].plus == tally[n].minus)
    {
      continue;
    }
    r.verdicts[n].vote = tally[n].plus > tally[n].minus ? Vote::kPlus : Vote::kMinus;
  }
  Score(r, targets);
  return r;
}

DisclosureResult DiscloseCombined(ObservationLog const &log, DisclosureTargets const &targets, int k,
                                  int rho, bool knows_i)
{
  auto certain = DiscloseCertain(log, targets, k, knows_i);
  auto greedy  = DiscloseGreedy(log, targets, rho);
  auto patient = DiscloseNonGreedy(log, targets);
  for (std::size_t n = 0; n < certain.verdicts.size(); ++n)
  {
    if (!certain.verdicts[n].vote)
    {
      certain.verdicts[n] = greedy.verdicts[n].vote ? greedy.verdicts[n] : patient.verdicts[n];
    }
  }
  return certain;
}

DisclosureResult Disclose(DisclosureRule rule, ObservationLog const &log,
                          DisclosureTargets const &targets, int k, int rho, bool knows_i)
{
  switch (rule)
  {
  case DisclosureRule::kCertain:
    return DiscloseCertain(log, targets, k, knows_i);
  case DisclosureRule::kGreedy:
    return DiscloseGreedy(log, targets, rho);
  case DisclosureRule::kNonGreedy:
    return DiscloseNonGreedy(log, targets);
  case DisclosureRule::kCombined:
    return DiscloseCombined(log, targets, k, rho, knows_i);
  }
  throw InvalidParameter("unknown disclosure rule");
}

bool CountRevealedBound(DisclosureResult const &result, std::size_t coalition_size)
{
  return result.certain() <= 2 * coalition_size;
}

}  // namespace epol
