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

#include <iosfwd>
#include <string>
#include <vector>

namespace epol {

// Edge list: first line "N M", then M lines "u v" with u < v.
void        WriteGraph(std::ostream &out, SocialGraph const &graph);
SocialGraph ReadGraph(std::istream &in);
void        SaveGraph(std::string const &path, SocialGraph const &graph);
SocialGraph LoadGraph(std::string const &path);

// Ordering cache: one line per source, "s: r0 r1 ... r(N-1)".
void                        WriteOrderings(std::ostream &out, std::vector<SourceOrdering> const &orderings);
std::vector<SourceOrdering> ReadOrderings(std::istream &in, SocialGraph const &graph);

}  // namespace epol
