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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nutforge/graph.hpp"

namespace nutforge {

class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CanonicalForm {
    std::string graph6;            // graph6 of the canonically relabelled graph
    std::vector<int> labelling;    // vertex v of the input becomes labelling[v]
    std::uint64_t nodes_explored = 0;
};

/// Canonical labelling by individualization and equitable refinement with a
/// full search tree. The result depends only on the isomorphism class. Throws
/// SearchBudgetExceeded once node_budget search nodes have been visited.
CanonicalForm canonical_form(const Graph& g, std::uint64_t node_budget = 2'000'000);

bool are_isomorphic(const Graph& a, const Graph& b, std::uint64_t node_budget = 2'000'000);

/// A bijection phi with a ~ b under phi (u adjacent to v in a iff phi[u] adjacent
/// to phi[v] in b), if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b,
                                                 std::uint64_t node_budget = 2'000'000);

}  // namespace nutforge
