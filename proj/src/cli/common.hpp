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

#include "epol/graph.hpp"
#include "epol/rational.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace epol::cli {

inline constexpr std::uint64_t kDefaultSeed = 20150601;

struct GraphSpec
{
  std::string family{"layered"};
  std::string path;
  int         n{16};
  std::string layers{"3,3,3"};
  int         backbone{5};
  int         outer{7};
  int         attach{3};
  bool        random_attach{false};
  std::string positions;
  double      span{10.0};
  double      threshold{2.5};
};

void AddGraphOptions(CLI::App &app, GraphSpec &spec);

/// Builds the graph described by spec. k and m are the poll parameters some
/// families are parameterised by.
SocialGraph BuildGraph(GraphSpec const &spec, int k, int m, std::uint64_t seed);

/// Boolean flag whose recorded default is the current value of `value`.
CLI::Option *AddFlag(CLI::App &app, std::string const &names, bool &value, std::string const &description);

void AddSeedOption(CLI::App &app, std::uint64_t &seed);

std::vector<int>    ParseIntList(std::string const &text);
std::vector<double> ParseDoubleList(std::string const &text);

/// Formats a double with 12 significant digits.
std::string Num(double x);

/// "# key=value" lines for every option of app, defaults included.
void WriteMetadata(std::ostream &out, CLI::App const &app, std::string const &command);

/// Opens path for writing, creating parent directories. "-" is not accepted.
std::unique_ptr<std::ostream> OpenOutput(std::string const &path);

class CsvWriter
{
public:
  CsvWriter(std::ostream &out, std::vector<std::string> header);

  void Row(std::vector<std::string> const &cells);

private:
  std::ostream &out_;
  std::size_t   width_;
};

using Command = int (*)(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

int GenGraph(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);
int Check(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);
int Run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);
int Sweep(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);
int Analyze(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

/// Must be called on a fresh app before any option is added.
void Prepare(CLI::App &app);

/// Parses args into app; returns -1 to continue or an exit code (help, errors).
int Parse(CLI::App &app, std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

}  // namespace epol::cli
