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

#include "common.hpp"

#include "epol/analysis.hpp"
#include "epol/montecarlo.hpp"
#include "epol/sim.hpp"

#include <algorithm>
#include <filesystem>
#include <limits>
#include <ostream>

namespace epol::cli {
namespace {

struct TrialRow
{
  std::uint64_t seed{0};
  int           truth{0};
  std::size_t   honest{0};
  int           min_result{0};
  int           max_result{0};
  bool          any_result{false};
  int           max_impact{0};
  double        mean_result{0.0};
  bool          terminated{false};
  std::size_t   undecided{0};
  std::size_t   crashed{0};
  std::size_t   decision_failures{0};
  std::size_t   wrong_decisions{0};
  std::size_t   detection_events{0};
  std::size_t   certain_reveals{0};
  std::size_t   certain_correct{0};
  std::size_t   greedy_correct{0};
  std::size_t   nongreedy_correct{0};
  bool          count_bound{true};
  std::size_t   max_messages{0};
  std::size_t   max_storage{0};
  std::size_t   spatial_violations{0};
  std::size_t   message_violations{0};
  std::size_t   events{0};
  double        end_time{0.0};
};

std::string Opt(std::optional<Rational> const &x)
{
  return x ? ToDecimal(*x) : std::string{};
}

template <typename F>
std::optional<Rational> Try(F &&f)
{
  try
  {
    return f();
  }
  catch (InvalidParameter const &)
  {
    return std::nullopt;
  }
}

}  // namespace

int Run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Simulate polls and write per-trial metrics and a summary", "epol run"};
  Prepare(app);
  GraphSpec     spec;
  PollConfig    config;
  config.m = 3;
  std::string   gamma_text = "0,1";
  std::string   coalition_text;
  int           dishonest = 0;
  bool          overshare = true;
  bool          invert    = true;
  bool          corrupt   = true;
  bool          out_of_range = false;
  std::string   corrupt_mode = "min";
  int           nominal      = 1;
  bool          knows_i      = true;
  int           rho          = 0;
  FaultPlan     faults;
  std::string   crash_timing = "window";
  RunOptions    options;
  double        deadline = 0.0;
  std::size_t   trials   = 1;
  unsigned      jobs     = 1;
  std::uint64_t seed     = kDefaultSeed;
  std::string   out_dir  = "epol-out";
  bool          trace    = false;

  AddGraphOptions(app, spec);
  app.add_option("--k", config.k, "Share parameter");
  app.add_option("--m", config.m, "Broadcast parameter");
  app.add_option("--gamma", gamma_text, "Share-index distribution, k+1 comma-separated values");
  app.add_option("--alpha", config.alpha, "Probability that an honest node votes +1");
  AddFlag(app, "--early-decision,!--no-early-decision", config.early_decision,
               "Decide once a strict majority of m equal copies is held");
  app.add_option("--coalition", coalition_text, "Comma-separated dishonest node ids");
  app.add_option("--dishonest", dishonest, "Size of a random coalition drawn per trial");
  AddFlag(app, "--overshare,!--no-overshare", overshare, "Dishonest nodes send 2k+1 shares of -1");
  AddFlag(app, "--invert,!--no-invert", invert, "Dishonest nodes turn received +1 shares into -1");
  AddFlag(app, "--corrupt-forward,!--no-corrupt-forward", corrupt, "Dishonest relays rewrite forwarded data");
  AddFlag(app, "--out-of-range", out_of_range, "Corrupted forwards fall outside the valid range");
  app.add_option("--corrupt-mode", corrupt_mode, "Rewritten value: min or random")
      ->check(CLI::IsMember({"min", "random"}));
  app.add_option("--nominal-vote", nominal, "Vote credited to dishonest nodes in the truth")
      ->check(CLI::IsMember({-1, 1}));
  AddFlag(app, "--adversary-knows-i,!--adversary-ignores-i", knows_i,
               "Certain rule uses the target's share index");
  app.add_option("--rho", rho, "Greedy disclosure threshold");
  app.add_option("--r", faults.r, "Crash probability per node");
  app.add_option("--l", faults.l, "Loss probability per message");
  app.add_option("--crash-timing", crash_timing, "window or start")->check(CLI::IsMember({"window", "start"}));
  AddFlag(app, "--exempt-dishonest", faults.exempt_dishonest, "Dishonest nodes never crash");
  app.add_option("--min-delay", options.min_delay, "Smallest message delay");
  app.add_option("--max-delay", options.max_delay, "Largest message delay");
  app.add_option("--share-spacing", options.share_spacing, "Gap between consecutive shares of a node");
  app.add_option("--sharing-deadline", deadline, "Broadcast at this time even with missing shares (0: off)");
  AddFlag(app, "--strict-pg3", options.strict_pg3, "Reject coalitions violating the relay condition");
  app.add_option("--trials", trials, "Number of polls");
  app.add_option("--jobs", jobs, "Worker threads");
  AddSeedOption(app, seed);
  app.add_option("--out-dir", out_dir, "Directory for the CSV files");
  AddFlag(app, "--trace", trace, "Also write the message trace of trial 0");
  if (int const code = Parse(app, args, out, err); code >= 0)
  {
    return code;
  }

  auto const gamma = ParseRationalList(gamma_text);
  ValidateGamma(gamma);
  if (config.k < 0 || gamma.size() != static_cast<std::size_t>(config.k + 1))
  {
    throw InvalidParameter("--gamma needs k+1 entries");
  }
  config.gamma = ToDoubles(gamma);
  if (config.alpha < 0 || config.alpha > 1)
  {
    throw InvalidParameter("--alpha must lie in [0,1]");
  }
  if (trials < 1)
  {
    throw InvalidParameter("--trials must be at least 1");
  }
  if (!(options.min_delay > 0) || options.max_delay < options.min_delay)
  {
    throw InvalidParameter("need 0 < min-delay <= max-delay");
  }
  if (deadline > 0)
  {
    options.sharing_deadline = deadline;
  }
  faults.timing = crash_timing == "start" ? CrashTiming::kAtStart : CrashTiming::kWindow;

  auto const graph    = BuildGraph(spec, config.k, config.m, seed);
  auto const prepared = PreparedGraph::Prepare(graph, config.m);
  NodeId const n      = graph.size();

  AdversaryModel base;
  base.overshare       = overshare;
  base.invert          = invert;
  base.corrupt_forward = corrupt;
  base.out_of_range    = out_of_range;
  base.corrupt_mode    = corrupt_mode == "random" ? CorruptMode::kRandom : CorruptMode::kMinimum;
  base.nominal_vote    = VoteFromSign(nominal);
  if (!coalition_text.empty())
  {
    if (dishonest > 0)
    {
      throw InvalidParameter("use either --coalition or --dishonest");
    }
    std::vector<NodeId> members;
    for (int id : ParseIntList(coalition_text))
    {
      if (id < 0)
      {
        throw InvalidParameter("negative node id in --coalition");
      }
      members.push_back(static_cast<NodeId>(id));
    }
    base.coalition = MakeCoalition(n, members).coalition;
  }
  if (dishonest < 0 || static_cast<NodeId>(dishonest) > n)
  {
    throw InvalidParameter("--dishonest outside [0, N]");
  }

  auto adversary_for = [&](std::uint64_t trial_seed) {
    AdversaryModel a = base;
    if (dishonest > 0)
    {
      auto rng    = MakeRng(trial_seed, 0, "coalition");
      a.coalition = RandomCoalition(n, static_cast<std::size_t>(dishonest), rng);
    }
    return a;
  };

  auto run_trial = [&](std::size_t t) {
    TrialRow row;
    row.seed         = DeriveSeed(seed, t, "trial");
    auto const adv   = adversary_for(row.seed);
    auto const trial = RunPoll(prepared, config, adv, faults, options, row.seed);
    row.truth             = trial.truth;
    row.terminated        = trial.terminated;
    row.max_impact        = trial.max_impact;
    row.decision_failures = trial.decision_failures;
    row.wrong_decisions   = trial.wrong_decisions;
    row.detection_events  = trial.detection_events;
    row.events            = trial.events;
    row.end_time          = trial.end_time;
    row.min_result        = std::numeric_limits<int>::max();
    row.max_result        = std::numeric_limits<int>::min();
    long long sum         = 0;
    std::size_t results   = 0;
    for (NodeId x = 0; x < n; ++x)
    {
      auto const &node = trial.nodes[x];
      row.crashed += node.crashed ? 1 : 0;
      auto const bounds = ComputeComplexityBounds(config.k, config.m, static_cast<int>(n),
                                                  static_cast<int>(graph.degree(x)));
      row.max_messages = std::max(row.max_messages, node.counters.messages_sent());
      row.max_storage  = std::max(row.max_storage, node.storage_high_water);
      if (!node.dishonest)
      {
        row.spatial_violations += static_cast<long long>(node.storage_high_water) > bounds.spatial ? 1 : 0;
        row.message_violations +=
            static_cast<long long>(node.counters.messages_sent()) > bounds.message ? 1 : 0;
      }
      if (node.dishonest || node.crashed)
      {
        continue;
      }
      ++row.honest;
      if (!node.result)
      {
        ++row.undecided;
        continue;
      }
      row.any_result = true;
      row.min_result = std::min(row.min_result, *node.result);
      row.max_result = std::max(row.max_result, *node.result);
      sum += *node.result;
      ++results;
    }
    row.mean_result = results ? static_cast<double>(sum) / static_cast<double>(results) : 0.0;

    DisclosureTargets targets{trial.votes, trial.share_index, {}};
    for (NodeId x = 0; x < n; ++x)
    {
      targets.honest.push_back(!adv.IsDishonest(x));
    }
    auto const certain = DiscloseCertain(trial.observations, targets, config.k, knows_i);
    row.certain_reveals   = certain.certain();
    row.certain_correct   = certain.correct();
    row.count_bound       = CountRevealedBound(certain, adv.size());
    if (rho >= 0 && rho <= config.k)
    {
      row.greedy_correct = DiscloseGreedy(trial.observations, targets, rho).correct();
    }
    row.nongreedy_correct = DiscloseNonGreedy(trial.observations, targets).correct();
    return row;
  };

  auto const rows = RunTrials<TrialRow>(trials, jobs, run_trial);

  std::filesystem::path const dir{out_dir};
  auto const                  metrics_path = (dir / "run_metrics.csv").string();
  auto const                  summary_path = (dir / "run_summary.csv").string();
  {
    auto file = OpenOutput(metrics_path);
    WriteMetadata(*file, app, "run");
    CsvWriter csv{*file,
                  {"trial", "seed", "truth", "honest_live", "min_result", "max_result", "max_impact", "terminated",
                   "undecided", "crashed", "decision_failures", "wrong_decisions", "detection_events",
                   "certain_reveals", "certain_correct", "greedy_correct", "nongreedy_correct", "max_messages",
                   "max_storage", "spatial_violations", "message_violations", "events", "end_time"}};
    for (std::size_t t = 0; t < rows.size(); ++t)
    {
      auto const &r = rows[t];
      csv.Row({std::to_string(t), std::to_string(r.seed), std::to_string(r.truth), std::to_string(r.honest),
               r.any_result ? std::to_string(r.min_result) : "", r.any_result ? std::to_string(r.max_result) : "",
               std::to_string(r.max_impact), r.terminated ? "1" : "0", std::to_string(r.undecided),
               std::to_string(r.crashed), std::to_string(r.decision_failures), std::to_string(r.wrong_decisions),
               std::to_string(r.detection_events), std::to_string(r.certain_reveals),
               std::to_string(r.certain_correct), std::to_string(r.greedy_correct),
               std::to_string(r.nongreedy_correct), std::to_string(r.max_messages), std::to_string(r.max_storage),
               std::to_string(r.spatial_violations), std::to_string(r.message_violations),
               std::to_string(r.events), Num(r.end_time)});
    }
  }

  RunningStat impact;
  RunningStat bias;
  RunningStat certain_rate;
  RunningStat greedy_rate;
  RunningStat nongreedy_rate;
  std::size_t terminated = 0;
  std::size_t wrong      = 0;
  std::size_t detections = 0;
  std::size_t failures   = 0;
  std::size_t count_violations   = 0;
  std::size_t spatial_violations = 0;
  std::size_t message_violations = 0;
  std::size_t d_total            = 0;
  for (auto const &r : rows)
  {
    impact.Add(r.max_impact);
    if (r.any_result)
    {
      bias.Add(r.truth - r.mean_result);
    }
    std::size_t const targets = static_cast<std::size_t>(n) - (dishonest > 0 ? dishonest : base.size());
    if (targets > 0)
    {
      certain_rate.Add(static_cast<double>(r.certain_correct) / static_cast<double>(targets));
      greedy_rate.Add(static_cast<double>(r.greedy_correct) / static_cast<double>(targets));
      nongreedy_rate.Add(static_cast<double>(r.nongreedy_correct) / static_cast<double>(targets));
    }
    terminated += r.terminated ? 1 : 0;
    wrong += r.wrong_decisions;
    detections += r.detection_events;
    failures += r.decision_failures;
    count_violations += r.count_bound ? 0 : 1;
    spatial_violations += r.spatial_violations;
    message_violations += r.message_violations;
  }
  d_total = dishonest > 0 ? static_cast<std::size_t>(dishonest) : base.size();
  int const  nn      = static_cast<int>(n);
  int const  dd      = static_cast<int>(d_total);
  auto const alpha_q = ParseRational(Num(config.alpha));
  auto const p_ce    = Try([&] { return PCeTotal(nn, dd, gamma); });
  auto const p_gr    = Try([&] { return PGrExact(nn, dd, rho, gamma); });
  auto const p_un    = Try([&] { return PUnExact(nn, dd, gamma); });
  auto const i_avg   = AvgImpact(gamma, alpha_q) * dd;
  long long const i_max = MaxImpact(config.k, dd);
  {
    auto file = OpenOutput(summary_path);
    WriteMetadata(*file, app, "run");
    CsvWriter csv{*file,
                  {"trials", "n", "d", "k", "m", "diameter", "mean_impact", "sd_impact", "max_impact",
                   "max_impact_bound", "mean_bias", "sd_bias", "avg_impact_bound", "terminated_fraction",
                   "decision_failures", "wrong_decisions", "detection_events", "certain_rate", "p_ce_exact",
                   "greedy_rate", "p_gr_exact", "nongreedy_rate", "p_un_exact", "count_bound_violations",
                   "spatial_bound_violations", "message_bound_violations"}};
    csv.Row({std::to_string(rows.size()), std::to_string(n), std::to_string(d_total), std::to_string(config.k),
             std::to_string(config.m), std::to_string(prepared.diameter), Num(impact.mean()),
             Num(std::sqrt(impact.variance())), Num(impact.max()), std::to_string(i_max), Num(bias.mean()),
             Num(std::sqrt(bias.variance())), ToDecimal(i_avg),
             Num(static_cast<double>(terminated) / static_cast<double>(rows.size())), std::to_string(failures),
             std::to_string(wrong), std::to_string(detections), Num(certain_rate.mean()), Opt(p_ce),
             Num(greedy_rate.mean()), Opt(p_gr), Num(nongreedy_rate.mean()), Opt(p_un),
             std::to_string(count_violations), std::to_string(spatial_violations),
             std::to_string(message_violations)});
  }

  if (trace)
  {
    auto opts         = options;
    opts.record_trace = true;
    auto const first  = RunPoll(prepared, config, adversary_for(rows.front().seed), faults, opts, rows.front().seed);
    auto file         = OpenOutput((dir / "run_trace.csv").string());
    WriteMetadata(*file, app, "run");
    CsvWriter csv{*file, {"time", "kind", "sender", "receiver", "source", "value"}};
    for (auto const &rec : first.trace)
    {
      auto const &msg = rec.message;
      csv.Row({Num(rec.time), msg.kind == Message::Kind::kShare ? "share" : "data", std::to_string(msg.sender),
               std::to_string(msg.receiver), std::to_string(msg.source), std::to_string(msg.value)});
    }
  }

  auto const &first = rows.front();
  out << "nodes: " << n << "  dishonest: " << d_total << "  trials: " << rows.size() << '\n';
  out << "trial 0: truth " << first.truth;
  if (first.any_result)
  {
    out << ", honest results in [" << first.min_result << ", " << first.max_result << "]";
  }
  out << ", impact " << first.max_impact << (first.terminated ? "" : " (some nodes undecided)") << '\n';
  out << "max impact over trials: " << impact.max() << " (bound (6k+4)D = " << i_max << ")\n";
  out << "wrote " << metrics_path << " and " << summary_path << '\n';
  return 0;
}

}  // namespace epol::cli
