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

#include "epol/cli.hpp"

#include "common.hpp"

#include <map>
#include <ostream>

namespace epol {

namespace {

struct Entry
{
  cli::Command run;
  char const  *summary;
};

std::map<std::string, Entry> const &Commands()
{
  static std::map<std::string, Entry> const table{
      {"gen-graph", {cli::GenGraph, "generate a graph of one of the supported families"}},
      {"check", {cli::Check, "check graph properties, diameter and tolerance"}},
      {"run", {cli::Run, "simulate polls and write per-trial metrics"}},
      {"sweep", {cli::Sweep, "disclosure probabilities over a D x gamma grid"}},
      {"analyze", {cli::Analyze, "evaluate the closed-form bounds"}},
  };
  return table;
}

void Usage(std::ostream &out)
{
  out << "usage: epol <command> [options]\n\ncommands:\n";
  for (auto const &[name, entry] : Commands())
  {
    out << "  " << name << std::string(12 - name.size(), ' ') << entry.summary << '\n';
  }
  out << "\nRun 'epol <command> --help' for the options of a command.\n";
}

}  // namespace

int RunCli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  if (args.empty())
  {
    Usage(err);
    return 2;
  }
  if (args.front() == "--help" || args.front() == "-h" || args.front() == "help")
  {
    Usage(out);
    return 0;
  }
  auto const it = Commands().find(args.front());
  if (it == Commands().end())
  {
    err << "epol: unknown command '" << args.front() << "'\n";
    Usage(err);
    return 2;
  }
  try
  {
    return it->second.run(std::vector<std::string>(args.begin() + 1, args.end()), out, err);
  }
  catch (std::exception const &e)
  {
    err << "epol " << args.front() << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace epol
