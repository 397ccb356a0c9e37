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

#include "cyclepack/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace cyclepack {

namespace {

// Reads one whitespace-separated non-negative integer; rejects signs and
// anything that is not a plain decimal literal.
std::uint64_t read_count(std::istream& in, const char* what,
                         std::size_t line) {
  std::string token;
  if (!(in >> token)) {
    throw ParseError("line " + std::to_string(line) + ": expected " + what);
  }
  std::uint64_t value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') {
      throw ParseError("line " + std::to_string(line) + ": '" + token +
                       "' is not a non-negative integer");
    }
    if (value > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
      throw ParseError("line " + std::to_string(line) + ": '" + token +
                       "' is too large");
    }
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return value;
}

}  // namespace

void write_edge_list(std::ostream& out, const Digraph& d) {
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.from << ' ' << a.to << '\n';
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream out;
  write_edge_list(out, d);
  return out.str();
}

Digraph parse_edge_list(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty input");
  std::istringstream head(header);
  const auto n = read_count(head, "vertex count", 1);
  const auto m = read_count(head, "arc count", 1);
  std::string rest;
  if (head >> rest) throw ParseError("line 1: trailing data '" + rest + "'");
  if (n > std::numeric_limits<Vertex>::max()) {
    throw ParseError("line 1: vertex count too large");
  }

  Digraph::Builder builder(n);
  std::string line;
  std::size_t line_no = 1;
  auto blank = [](const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
  };
  for (std::uint64_t i = 0; i < m; ++i) {
    do {
      ++line_no;
      if (!std::getline(in, line)) {
        throw ParseError("expected " + std::to_string(m) + " arcs, found " +
                         std::to_string(i));
      }
    } while (blank(line));
    std::istringstream row(line);
    const auto u = read_count(row, "arc tail", line_no);
    const auto v = read_count(row, "arc head", line_no);
    if (row >> rest) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": trailing data '" + rest + "'");
    }
    if (u >= n || v >= n) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": vertex out of range");
    }
    builder.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": more arcs than declared");
    }
  }
  try {
    return std::move(builder).build();
  } catch (const InvalidDigraph& e) {
    throw ParseError(e.what());
  }
}

Digraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Digraph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_edge_list(in);
}

void write_edge_list_file(const std::filesystem::path& path,
                          const Digraph& d) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, d);
}

std::string to_dot(const Digraph& d, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) {
    out << "  " << a.from << " -> " << a.to << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cyclepack
