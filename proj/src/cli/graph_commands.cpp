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

#include "epol/adversary.hpp"
#include "epol/analysis.hpp"
#include "epol/graph_io.hpp"

#include <ostream>

namespace epol::cli {
namespace {

char const *YesNo(bool b)
{
  return b ? "yes" : "no";
}

int LargestM(SocialGraph const &graph)
{
  int best = 0;
  for (int m = 1; m <= static_cast<int>(graph.max_degree()) && m < static_cast<int>(graph.size()); ++m)
  {
    if (!CheckMBroadcasting(graph, m).ok)
    {
      break;
    }
    best = m;
  }
  return best;
}

void Summary(std::ostream &report, SocialGraph const &graph, int m)
{
  bool const connected = IsConnected(graph);
  report << "nodes: " << graph.size() << '\n'
         << "edges: " << graph.edge_count() << '\n'
         << "min_degree: " << graph.min_degree() << '\n'
         << "max_degree: " << graph.max_degree() << '\n'
         << "connected: " << YesNo(connected) << '\n';
  if (connected)
  {
    report << "diameter: " << Diameter(graph) << '\n';
  }
  auto const verdict = CheckMBroadcasting(graph, m);
  report << "m: " << m << '\n' << "m_broadcasting: " << YesNo(verdict.ok) << '\n';
  if (!verdict.ok && verdict.failing_source)
  {
    report << "failing_source: " << *verdict.failing_source << '\n'
           << "stuck_node: " << *verdict.stuck_node << '\n';
  }
  if (connected)
  {
    report << "largest_m: " << LargestM(graph) << '\n';
  }
}

}  // namespace

int GenGraph(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Generate a graph and report whether it is m-broadcasting", "epol gen-graph"};
  Prepare(app);
  GraphSpec     spec;
  int           k = 1;
  int           m = 3;
  std::uint64_t seed = kDefaultSeed;
  std::string   path = "-";
  AddGraphOptions(app, spec);
  app.add_option("--k", k, "Share parameter (cluster-ring, circle)");
  app.add_option("--m", m, "Broadcast parameter");
  AddSeedOption(app, seed);
  app.add_option("--out", path, "Output edge-list file, '-' for standard output");
  if (int const code = Parse(app, args, out, err); code >= 0)
  {
    return code;
  }
  auto const graph = BuildGraph(spec, k, m, seed);
  if (path == "-")
  {
    WriteGraph(out, graph);
    Summary(err, graph, m);
  }
  else
  {
    auto file = OpenOutput(path);
    WriteGraph(*file, graph);
    Summary(out, graph, m);
  }
  return 0;
}

int Check(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Check graph properties for given k and m", "epol check"};
  Prepare(app);
  GraphSpec     spec;
  int           k = 1;
  int           m = 3;
  std::uint64_t seed = kDefaultSeed;
  std::string   coalition;
  std::string   orderings_path;
  AddGraphOptions(app, spec);
  app.add_option("--k", k, "Share parameter");
  app.add_option("--m", m, "Broadcast parameter");
  app.add_option("--coalition", coalition, "Comma-separated dishonest node ids");
  app.add_option("--orderings", orderings_path, "Write the witness orderings to this file");
  AddSeedOption(app, seed);
  if (int const code = Parse(app, args, out, err); code >= 0)
  {
    return code;
  }
  if (k < 0 || m < 1)
  {
    throw InvalidParameter("need k >= 0 and m >= 1");
  }
  auto const graph     = BuildGraph(spec, k, m, seed);
  bool const connected = IsConnected(graph);
  bool const pg1       = graph.min_degree() >= static_cast<std::size_t>(2 * k + 1);
  auto const verdict   = CheckMBroadcasting(graph, m);

  out << "nodes: " << graph.size() << '\n'
      << "edges: " << graph.edge_count() << '\n'
      << "min_degree: " << graph.min_degree() << '\n'
      << "max_degree: " << graph.max_degree() << '\n'
      << "connected: " << YesNo(connected) << '\n'
      << "pg1: " << YesNo(pg1) << '\n'
      << "pg2: " << YesNo(verdict.ok) << '\n';
  if (!verdict.ok && verdict.failing_source)
  {
    out << "failing_source: " << *verdict.failing_source << '\n' << "stuck_node: " << *verdict.stuck_node << '\n';
  }
  if (connected)
  {
    int const diameter = Diameter(graph);
    out << "diameter: " << diameter << '\n' << "tolerance: " << Tolerance(m, diameter) << '\n';
  }
  std::string klass = pg1 && verdict.ok ? "G1" : "neither";
  if (!coalition.empty())
  {
    auto ids = ParseIntList(coalition);
    std::vector<NodeId> members;
    for (int id : ids)
    {
      if (id < 0)
      {
        throw InvalidParameter("negative node id in --coalition");
      }
      members.push_back(static_cast<NodeId>(id));
    }
    auto const model = MakeCoalition(graph.size(), members);
    out << "coalition_size: " << model.size() << '\n';
    if (verdict.ok)
    {
      bool const pg3 = CheckPg3(graph, m, model.coalition, verdict.orderings);
      out << "pg3: " << YesNo(pg3) << '\n';
      klass = pg1 && pg3 ? "G2" : "neither";
    }
    else
    {
      klass = "neither";
    }
  }
  out << "class: " << klass << '\n';
  if (!orderings_path.empty() && verdict.ok)
  {
    auto file = OpenOutput(orderings_path);
    WriteOrderings(*file, verdict.orderings);
  }
  return 0;
}

}  // namespace epol::cli
