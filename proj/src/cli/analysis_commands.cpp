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
#include "epol/disclosure_model.hpp"
#include "epol/montecarlo.hpp"
#include "epol/rng.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>

namespace epol::cli {
namespace {

template <typename F>
std::string Cell(F &&f)
{
  try
  {
    return ToDecimal(f());
  }
  catch (InvalidParameter const &)
  {
    return {};
  }
}

/// gamma with gamma_k = x and the rest spread evenly over 0..k-1.
Gamma TopWeighted(int k, Rational const &x)
{
  Gamma g(static_cast<std::size_t>(k + 1), Rational{0});
  g.back() = x;
  if (k > 0)
  {
    for (int i = 0; i < k; ++i)
    {
      g[static_cast<std::size_t>(i)] = (1 - x) / k;
    }
  }
  return g;
}

struct Point
{
  int      d{0};
  int      i{0};
  Rational x;
};

struct Estimate
{
  std::string empirical;
  std::string stderr_text;
  std::string sigmas;
};

Estimate Compare(double p, double scale, Rational const &exact, std::size_t trials)
{
  if (trials == 0)
  {
    return {};
  }
  double const se  = scale * std::sqrt(p * (1 - p) / static_cast<double>(trials));
  double const emp = scale * p;
  double const res = emp - ToDouble(exact);
  return {Num(emp), Num(se), se > 0 ? Num(res / se) : (res == 0 ? "0" : "")};
}

}  // namespace

int Sweep(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Disclosure probabilities over a grid of coalition sizes and share-index weights", "epol sweep"};
  Prepare(app);
  int           n       = 100;
  int           k       = 1;
  std::string   d_text  = "0,5,10,15,20";
  int           steps   = 10;
  int           rho     = 0;
  std::size_t   trials  = 10000;
  bool          knows_i = true;
  unsigned      jobs    = 1;
  std::uint64_t seed    = kDefaultSeed;
  std::string   out_dir = "epol-out";
  app.add_option("--n", n, "Population size");
  app.add_option("--k", k, "Share parameter");
  app.add_option("--d", d_text, "Comma-separated coalition sizes");
  app.add_option("--gamma-steps", steps, "Grid resolution of gamma in [0,1]");
  app.add_option("--rho", rho, "Greedy disclosure threshold");
  app.add_option("--trials", trials, "Monte Carlo draws per grid point (0 skips the empirical columns)");
  AddFlag(app, "--adversary-knows-i,!--adversary-ignores-i", knows_i, "Certain rule uses the share index");
  app.add_option("--jobs", jobs, "Worker threads");
  AddSeedOption(app, seed);
  app.add_option("--out-dir", out_dir, "Directory for the CSV files");
  if (int const code = Parse(app, args, out, err); code >= 0)
  {
    return code;
  }
  if (k < 0 || steps < 1 || n < 2 * k + 1)
  {
    throw InvalidParameter("need k >= 0, --gamma-steps >= 1 and N >= 2k+1");
  }
  auto const ds = ParseIntList(d_text);
  for (int d : ds)
  {
    if (d < 0 || d > n)
    {
      throw InvalidParameter("coalition size outside [0, N]");
    }
  }

  std::vector<Point> certain_points;
  std::vector<Point> top_points;
  for (int d : ds)
  {
    for (int s = 0; s <= steps; ++s)
    {
      Rational const x{s, steps};
      for (int i = 0; i <= k; ++i)
      {
        certain_points.push_back({d, i, x});
      }
      if (k > 0 || s == steps)
      {
        top_points.push_back({d, k, x});
      }
    }
  }

  // one estimate per (d, i) for the unit-gamma certain rate, scaled by gamma_i
  std::vector<std::pair<int, int>> unit_keys;
  for (int d : ds)
  {
    for (int i = 0; i <= k; ++i)
    {
      unit_keys.emplace_back(d, i);
    }
  }
  auto const unit = RunTrials<double>(unit_keys.size(), jobs, [&](std::size_t j) {
    if (trials == 0)
    {
      return 0.0;
    }
    auto const [d, i] = unit_keys[j];
    std::vector<double> g(static_cast<std::size_t>(k + 1), 0.0);
    g[static_cast<std::size_t>(i)] = 1.0;
    return EstimateDisclosure(n, d, g, {DisclosureRule::kCertain, rho, knows_i}, trials, DeriveSeed(seed, j, "certain"));
  });

  auto estimate = [&](DisclosureRule rule, char const *tag) {
    return RunTrials<double>(top_points.size(), jobs, [&, rule, tag](std::size_t j) {
      if (trials == 0)
      {
        return 0.0;
      }
      auto const &p = top_points[j];
      return EstimateDisclosure(n, p.d, ToDoubles(TopWeighted(k, p.x)), {rule, rho, knows_i}, trials,
                                DeriveSeed(seed, j, tag));
    });
  };
  auto const greedy    = estimate(DisclosureRule::kGreedy, "greedy");
  auto const nongreedy = estimate(DisclosureRule::kNonGreedy, "nongreedy");

  std::filesystem::path const dir{out_dir};
  {
    auto file = OpenOutput((dir / "privacy_certain.csv").string());
    WriteMetadata(*file, app, "sweep");
    CsvWriter csv{*file, {"d", "i", "gamma_i", "bound", "exact", "empirical", "stderr", "residual_sigmas"}};
    for (auto const &p : certain_points)
    {
      Rational const exact = PCeExact(n, p.d, p.i, p.x);
      std::size_t    key   = 0;
      while (unit_keys[key] != std::pair{p.d, p.i})
      {
        ++key;
      }
      auto const est = Compare(unit[key], ToDouble(p.x), exact, trials);
      csv.Row({std::to_string(p.d), std::to_string(p.i), ToDecimal(p.x), ToDecimal(PCeBound(n, p.d, p.i, p.x)),
               ToDecimal(exact), est.empirical, est.stderr_text, est.sigmas});
    }
  }
  auto write_top = [&](char const *name, std::vector<double> const &emp, auto exact_fn, auto bound_fn) {
    auto file = OpenOutput((dir / name).string());
    WriteMetadata(*file, app, "sweep");
    CsvWriter csv{*file, {"d", "gamma_k", "exact", "bound", "empirical", "stderr", "residual_sigmas"}};
    for (std::size_t j = 0; j < top_points.size(); ++j)
    {
      auto const &p     = top_points[j];
      auto const  gamma = TopWeighted(k, p.x);
      Rational const exact = exact_fn(p.d, gamma);
      auto const     est   = Compare(emp[j], 1.0, exact, trials);
      csv.Row({std::to_string(p.d), ToDecimal(p.x), ToDecimal(exact), Cell([&] { return bound_fn(p.d, gamma); }),
               est.empirical, est.stderr_text, est.sigmas});
    }
  };
  write_top("privacy_greedy.csv", greedy, [&](int d, Gamma const &g) { return PGrExact(n, d, rho, g); },
            [&](int d, Gamma const &g) { return PGrBound(n, d, rho, g); });
  write_top("privacy_nongreedy.csv", nongreedy, [&](int d, Gamma const &g) { return PUnExact(n, d, g); },
            [&](int d, Gamma const &g) { return PUnBound(n, d, g); });

  out << "wrote privacy_certain.csv, privacy_greedy.csv, privacy_nongreedy.csv to " << dir.string() << '\n';
  return 0;
}

int Analyze(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Evaluate the closed-form privacy, impact, tolerance and complexity expressions", "epol analyze"};
  Prepare(app);
  GraphSpec     spec;
  std::string   n_text     = "100";
  std::string   d_text     = "0,1,5,10,20";
  int           k          = 1;
  int           m          = 3;
  int           rho        = 0;
  std::string   gamma_text = "0,1";
  std::string   alpha_text = "1/2";
  int           diameter   = 5;
  int           degree     = 0;
  std::string   r_text     = "0";
  std::string   l_text     = "0";
  std::uint64_t seed       = kDefaultSeed;
  std::string   path       = "-";
  AddGraphOptions(app, spec);
  app.add_option("--n-values", n_text, "Comma-separated population sizes");
  app.add_option("--d", d_text, "Comma-separated coalition sizes");
  app.add_option("--k", k, "Share parameter");
  app.add_option("--m", m, "Broadcast parameter");
  app.add_option("--rho", rho, "Greedy disclosure threshold");
  app.add_option("--gamma", gamma_text, "Share-index distribution, k+1 values");
  app.add_option("--alpha", alpha_text, "Proportion of +1 votes (exact rational or decimal)");
  app.add_option("--diameter", diameter, "Graph diameter when no graph is given");
  app.add_option("--degree", degree, "Largest node degree when no graph is given (0: 2k+1+m)");
  app.add_option("--r", r_text, "Crash probability");
  app.add_option("--l", l_text, "Loss probability");
  AddSeedOption(app, seed);
  app.add_option("--out", path, "Output CSV file, '-' for standard output");
  if (int const code = Parse(app, args, out, err); code >= 0)
  {
    return code;
  }
  auto const gamma = ParseRationalList(gamma_text);
  ValidateGamma(gamma);
  if (gamma.size() != static_cast<std::size_t>(k + 1))
  {
    throw InvalidParameter("--gamma needs k+1 entries");
  }
  auto const alpha = ParseRational(alpha_text);
  auto const q     = LossProbability(ParseRational(r_text), ParseRational(l_text));
  auto       ns    = ParseIntList(n_text);
  if (app.count("--family") + app.count("--graph") > 0)
  {
    auto const graph = BuildGraph(spec, k, m, seed);
    if (!IsConnected(graph))
    {
      throw InvalidGraph("graph is disconnected");
    }
    diameter = Diameter(graph);
    degree   = static_cast<int>(graph.max_degree());
    ns       = {static_cast<int>(graph.size())};
  }
  if (degree == 0)
  {
    degree = 2 * k + 1 + m;
  }

  std::unique_ptr<std::ostream> file;
  std::ostream                 *sink = &out;
  if (path != "-")
  {
    file = OpenOutput(path);
    sink = file.get();
  }
  WriteMetadata(*sink, app, "analyze");
  CsvWriter csv{*sink,
                {"n", "d", "k", "m", "rho", "alpha", "p_ce_exact", "p_ce_bound", "p_gr_exact", "p_gr_bound",
                 "p_un_exact", "p_un_bound", "p_com", "max_impact", "avg_impact", "biased_lo", "biased_hi",
                 "biased_all_2k1", "diameter", "tolerance", "ring_tolerance", "wrong_decision_bound", "degree",
                 "spatial_bound", "message_bound", "q", "crash_impact_bound"}};
  for (int n : ns)
  {
    for (int d : ParseIntList(d_text))
    {
      auto const bounds = ComputeComplexityBounds(k, m, n, degree);
      auto const range  = Cell([&] { return BiasedResultRange(n, d, k, alpha).lo; });
      auto const hi     = Cell([&] { return BiasedResultRange(n, d, k, alpha).hi; });
      std::string wrong;
      try
      {
        wrong = Num(WrongDecisionBound(n, m, diameter, d));
      }
      catch (InvalidParameter const &)
      {
      }
      csv.Row({std::to_string(n), std::to_string(d), std::to_string(k), std::to_string(m), std::to_string(rho),
               ToDecimal(alpha), Cell([&] { return PCeTotal(n, d, gamma); }),
               Cell([&] {
                 Rational sum = 0;
                 for (int i = 0; i <= k; ++i)
                 {
                   sum += PCeBound(n, d, i, gamma[static_cast<std::size_t>(i)]);
                 }
                 return sum;
               }),
               Cell([&] { return PGrExact(n, d, rho, gamma); }), Cell([&] { return PGrBound(n, d, rho, gamma); }),
               Cell([&] { return PUnExact(n, d, gamma); }), Cell([&] { return PUnBound(n, d, gamma); }),
               Cell([&] { return PCom(n, d, rho, gamma); }), std::to_string(MaxImpact(k, d)),
               Cell([&] { return AvgImpact(gamma, alpha) * d; }), range, hi,
               Cell([&] { return BiasedResultAll2k1(n, d, k, alpha); }), std::to_string(diameter),
               std::to_string(Tolerance(m, diameter)),
               std::to_string(static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(n)))) - 1), wrong,
               std::to_string(degree), std::to_string(bounds.spatial), std::to_string(bounds.message), ToDecimal(q),
               std::to_string(CrashImpactBound(k))});
    }
  }
  return 0;
}

}  // namespace epol::cli
