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

#include "epol/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace epol {

void WriteGraph(std::ostream &out, SocialGraph const &graph)
{
  out << graph.size() << ' ' << graph.edge_count() << '\n';
  for (auto const &[u, v] : graph.Edges())
  {
    out << u << ' ' << v << '\n';
  }
}

SocialGraph ReadGraph(std::istream &in)
{
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0)
  {
    throw InvalidGraph("malformed graph header");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e)
  {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v))
    {
      throw InvalidGraph("graph file ends after " + std::to_string(e) + " edges");
    }
    if (u < 0 || v < 0 || u >= v || v >= n)
    {
      throw InvalidGraph("edge line must satisfy 0 <= u < v < N");
    }
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  return SocialGraph::FromEdges(static_cast<NodeId>(n), edges);
}

void SaveGraph(std::string const &path, SocialGraph const &graph)
{
  std::ofstream out{path};
  if (!out)
  {
    throw Error("cannot write " + path);
  }
  WriteGraph(out, graph);
}

SocialGraph LoadGraph(std::string const &path)
{
  std::ifstream in{path};
  if (!in)
  {
    throw Error("cannot read " + path);
  }
  return ReadGraph(in);
}

void WriteOrderings(std::ostream &out, std::vector<SourceOrdering> const &orderings)
{
  for (auto const &o : orderings)
  {
    out << o.source << ':';
    for (NodeId x : o.order)
    {
      out << ' ' << x;
    }
    out << '\n';
  }
}

std::vector<SourceOrdering> ReadOrderings(std::istream &in, SocialGraph const &graph)
{
  std::vector<SourceOrdering> out;
  std::string                 line;
  while (std::getline(in, line))
  {
    if (line.empty())
    {
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos)
    {
      throw InvalidParameter("ordering line lacks ':'");
    }
    auto                source = static_cast<NodeId>(std::stoul(line.substr(0, colon)));
    std::istringstream  rest{line.substr(colon + 1)};
    std::vector<NodeId> order;
    unsigned long       x = 0;
    while (rest >> x)
    {
      order.push_back(static_cast<NodeId>(x));
    }
    out.push_back(MakeOrdering(graph, source, std::move(order)));
  }
  return out;
}

}  // namespace epol
