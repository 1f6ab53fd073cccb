/*
   Copyright 2026 The nutforge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nutforge/graph.hpp"

namespace nutforge {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

/// One line per vertex: "v: u1 u2 ...".
std::string to_adjacency_list(const Graph& g);
/// Accepts "v: u1 u2 ..." lines (vertices 0-based, colon optional); '#' starts a comment.
Graph from_adjacency_list(const std::string& text);

std::string to_dot(const Graph& g, const std::string& name = "G");

using GraphSpec = std::variant<CirculantSpec, DihedralSpec, BicirculantSpec>;

/// Parses lines such as
///   circulant n=8 jumps=1,2
///   dihedral m=8 rot=1,7 refl=0,1,4,6
///   bicirculant m=5 s0=1,4 s1=0,1 s2=2,3
/// The resulting spec is validated.
GraphSpec parse_graph_spec(const std::string& line);
std::string to_string(const GraphSpec& spec);
Graph build_graph(const GraphSpec& spec);

enum class InputFormat { automatic, graph6, adjacency_list, spec };

InputFormat parse_input_format(const std::string& name);

struct GraphInput {
    Graph graph;
    std::string label;                // the source line or "adjacency list"
    std::optional<GraphSpec> spec;    // set when the input was a spec line
};

/// Reads one or more graphs. graph6 and spec inputs carry one graph per line;
/// an adjacency list is one graph per document.
std::vector<GraphInput> read_graphs(const std::string& text, InputFormat format);

}  // namespace nutforge
