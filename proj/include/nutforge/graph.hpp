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
#include <set>
#include <string>
#include <vector>

#include "nutforge/matrix.hpp"

namespace nutforge {

/// Undirected simple graph on vertices 0..order-1 with a dense adjacency matrix.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    int order() const { return n_; }

    bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> degrees() const;
    std::vector<int> neighbours(int v) const;
    std::size_t edge_count() const;

    /// A(G) + shift * I as an integer matrix.
    IntMatrix adjacency_matrix(long shift = 0) const;

    Graph relabel(const std::vector<int>& perm) const;  // vertex v becomes perm[v]

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Cay(Z_n, {+-j : j in jumps}).
struct CirculantSpec {
    int n = 0;
    std::set<int> jumps;  // subset of [1, n/2]
    void validate() const;
};

/// Cay(Dih(m), {r^a : a in rotations} U {r^b s : b in reflections}), edges x ~ c x.
struct DihedralSpec {
    int m = 0;
    std::set<int> rotations;    // subset of [1, m-1], closed under a -> m - a
    std::set<int> reflections;  // subset of [0, m-1]
    void validate() const;
    int degree() const { return static_cast<int>(rotations.size() + reflections.size()); }
};

/// Block adjacency [C(s0), C(s1)^T; C(s1), C(s2)] of order 2m, where C(S) is the
/// binary circulant with (C)_{i,j} = 1 iff j - i (mod m) lies in S.
struct BicirculantSpec {
    int m = 0;
    std::set<int> s0;  // subset of [1, m-1], closed under a -> m - a
    std::set<int> s1;  // subset of [0, m-1]
    std::set<int> s2;  // subset of [1, m-1], closed under a -> m - a
    void validate() const;

    static BicirculantSpec from_dihedral(const DihedralSpec& spec);
    bool is_dihedral() const { return s0 == s2; }
};

struct LcfSpec {
    int n = 0;
    std::vector<int> pattern;
};

Graph build_circulant(const CirculantSpec& spec);

/// Vertices ordered e, r, ..., r^{m-1}, s, r^{-1}s, ..., r^{-(m-1)}s, giving
/// the block form [C(rot), C(-refl); C(refl), C(rot)].
Graph build_dihedral(const DihedralSpec& spec);

Graph build_bicirculant(const BicirculantSpec& spec);

/// Hamiltonian cycle 0..n-1 plus chords i -> i + pattern[i mod len]. Throws if a
/// chord is a loop or repeats a cycle edge, or if the result is not cubic.
Graph build_lcf(const LcfSpec& spec);

Graph complement(const Graph& g);

std::optional<int> is_regular(const Graph& g);

// Small reference graphs.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph prism_graph(int k);  // C_k x K_2

std::set<int> symmetric_closure(const std::set<int>& s, int m);

}  // namespace nutforge
