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

#include "epol/generators.hpp"
#include "epol/graph_io.hpp"
#include "epol/rng.hpp"

#include <boost/algorithm/string.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace epol::cli {

void AddGraphOptions(CLI::App &app, GraphSpec &spec)
{
  app.add_option("--family", spec.family, "Graph family")
      ->check(CLI::IsMember({"layered", "backbone", "geometric", "cluster-ring", "circle", "clique", "file"}));
  app.add_option("--graph", spec.path, "Edge-list file (implies --family file)");
  app.add_option("--n", spec.n, "Node count (cluster-ring, circle, clique, random geometric)");
  app.add_option("--layers", spec.layers, "Comma-separated layer sizes (layered)");
  app.add_option("--backbone", spec.backbone, "Backbone clique size (backbone)");
  app.add_option("--outer", spec.outer, "Number of outer nodes (backbone)");
  app.add_option("--attach", spec.attach, "Backbone links per outer node (backbone)");
  AddFlag(app, "--random-attach", spec.random_attach, "Pick backbone links at random (backbone)");
  app.add_option("--positions", spec.positions, "Comma-separated node positions (geometric)");
  app.add_option("--span", spec.span, "Line length for random positions (geometric)");
  app.add_option("--threshold", spec.threshold, "Link distance threshold (geometric)");
}

SocialGraph BuildGraph(GraphSpec const &spec, int k, int m, std::uint64_t seed)
{
  auto rng = MakeRng(seed, 0, "graph");
  if (!spec.path.empty() || spec.family == "file")
  {
    if (spec.path.empty())
    {
      throw InvalidParameter("--family file needs --graph");
    }
    return LoadGraph(spec.path);
  }
  if (spec.family == "layered")
  {
    return GenerateLayered(ParseIntList(spec.layers), m);
  }
  if (spec.family == "backbone")
  {
    if (spec.outer < 0)
    {
      throw InvalidParameter("--outer must be non-negative");
    }
    return GenerateBackbone(spec.backbone, std::vector<int>(static_cast<std::size_t>(spec.outer), spec.attach), m,
                            spec.random_attach ? &rng : nullptr);
  }
  if (spec.family == "geometric")
  {
    std::vector<double> pos;
    if (!spec.positions.empty())
    {
      pos = ParseDoubleList(spec.positions);
    }
    else
    {
      if (spec.n < 1 || !(spec.span > 0.0))
      {
        throw InvalidParameter("random positions need --n >= 1 and --span > 0");
      }
      for (int j = 0; j < spec.n; ++j)
      {
        pos.push_back(spec.span * Uniform01(rng));
      }
    }
    std::sort(pos.begin(), pos.end());
    return GenerateGeometric1d(pos, spec.threshold, m);
  }
  if (spec.family == "cluster-ring")
  {
    return GenerateClusterRing(spec.n, k);
  }
  if (spec.family == "circle")
  {
    return GenerateCircle(spec.n, k);
  }
  return GenerateClique(spec.n);
}

CLI::Option *AddFlag(CLI::App &app, std::string const &names, bool &value, std::string const &description)
{
  return app.add_flag(names, value, description)->default_str(value ? "true" : "false");
}

void AddSeedOption(CLI::App &app, std::uint64_t &seed)
{
  app.add_option("--seed", seed, "Master seed")->envname("EPOL_SEED");
}

namespace {

std::vector<std::string> SplitList(std::string const &text)
{
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::algorithm::is_any_of(","));
  for (auto &p : parts)
  {
    boost::algorithm::trim(p);
    if (p.empty())
    {
      throw InvalidParameter("empty entry in list '" + text + "'");
    }
  }
  return parts;
}

}  // namespace

std::vector<int> ParseIntList(std::string const &text)
{
  std::vector<int> out;
  for (auto const &p : SplitList(text))
  {
    std::size_t used = 0;
    int         v    = 0;
    try
    {
      v = std::stoi(p, &used);
    }
    catch (std::exception const &)
    {
      used = 0;
    }
    if (used != p.size())
    {
      throw InvalidParameter("not an integer: '" + p + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> ParseDoubleList(std::string const &text)
{
  std::vector<double> out;
  for (auto const &p : SplitList(text))
  {
    out.push_back(ToDouble(ParseRational(p)));
  }
  return out;
}

std::string Num(double x)
{
  return fmt::format("{:.12g}", x);
}

void WriteMetadata(std::ostream &out, CLI::App const &app, std::string const &command)
{
  out << "# command=" << command << '\n';
  std::istringstream lines{app.config_to_str(true, false)};
  for (std::string line; std::getline(lines, line);)
  {
    if (!line.empty())
    {
      out << "# " << line << '\n';
    }
  }
}

std::unique_ptr<std::ostream> OpenOutput(std::string const &path)
{
  std::filesystem::path const p{path};
  if (p.has_parent_path())
  {
    std::filesystem::create_directories(p.parent_path());
  }
  auto file = std::make_unique<std::ofstream>(p);
  if (!*file)
  {
    throw InvalidParameter("cannot write " + path);
  }
  return file;
}

CsvWriter::CsvWriter(std::ostream &out, std::vector<std::string> header)
  : out_{out}
  , width_{header.size()}
{
  Row(header);
}

void CsvWriter::Row(std::vector<std::string> const &cells)
{
  if (cells.size() != width_)
  {
    throw std::logic_error("CSV row width differs from the header");
  }
  for (std::size_t j = 0; j < cells.size(); ++j)
  {
    out_ << (j ? "," : "") << cells[j];
  }
  out_ << '\n';
}

void Prepare(CLI::App &app)
{
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "Key = value file; flags given on the command line take precedence");
}

int Parse(CLI::App &app, std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try
  {
    app.parse(reversed);
  }
  catch (CLI::ParseError const &e)
  {
    return app.exit(e, out, err);
  }
  return -1;
}

}  // namespace epol::cli
