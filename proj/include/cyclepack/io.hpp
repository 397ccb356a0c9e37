// Copyright 2026 The cyclepack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYCLEPACK_IO_HPP_
#define CYCLEPACK_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cyclepack/digraph.hpp"

namespace cyclepack {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list text format:
//
//   n m
//   u v        (m lines, 0-based, one arc per line)
//
// Output lists arcs sorted lexicographically and ends with a newline.
std::string to_edge_list(const Digraph& d);
void write_edge_list(std::ostream& out, const Digraph& d);

Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list(const std::string& text);
Digraph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list_file(const std::filesystem::path& path, const Digraph& d);

// DOT: a single `digraph` block, bare integer vertex ids, one edge statement
// per arc.
std::string to_dot(const Digraph& d, const std::string& name = "D");

}  // namespace cyclepack

#endif  // CYCLEPACK_IO_HPP_
