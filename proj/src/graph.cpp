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

#include "nutforge/graph.hpp"

#include <stdexcept>
#include <string>

namespace nutforge {

namespace {

int mod(int a, int m) {
    const int r = a % m;
    return r < 0 ? r + m : r;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_inverse_closed(const std::set<int>& s, int m, const char* what) {
    for (int a : s) {
        require(a >= 1 && a <= m - 1, std::string(what) + ": element " + std::to_string(a) + " outside [1, m-1]");
        require(s.count(m - a) != 0, std::string(what) + ": not closed under a -> m - a (missing " +
                                         std::to_string(m - a) + ")");
    }
}

// Fills the (row_off, col_off) m x m block with the circulant on `conn`.
void fill_circulant_block(Graph& g, int m, int row_off, int col_off, const std::set<int>& conn) {
    for (int i = 0; i < m; ++i)
        for (int s : conn) {
            const int j = mod(i + s, m);
            const int u = row_off + i;
            const int v = col_off + j;
            if (u != v) g.add_edge(u, v);
        }
}

}  // namespace

Graph::Graph(int order) : n_(order) {
    require(order >= 0, "Graph: negative order");
    adj_.assign(static_cast<std::size_t>(order) * order, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    require(u != v, "Graph: self-loop at vertex " + std::to_string(u));
    adj_[index(u, v)] = 1;
    adj_[index(v, u)] = 1;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[index(u, v)] = 0;
    adj_[index(v, u)] = 0;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[index(v, u)];
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

std::vector<int> Graph::neighbours(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adj_[index(v, u)]) out.push_back(u);
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto x : adj_) twice += x;
    return twice / 2;
}

IntMatrix Graph::adjacency_matrix(long shift) const {
    IntMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j)
            if (adj_[index(i, j)]) m(i, j) = 1;
        if (shift != 0) m(i, i) = shift;
    }
    return m;
}

Graph Graph::relabel(const std::vector<int>& perm) const {
    require(static_cast<int>(perm.size()) == n_, "Graph::relabel: permutation size mismatch");
    Graph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.add_edge(perm[u], perm[v]);
    return out;
}

std::set<int> symmetric_closure(const std::set<int>& s, int m) {
    std::set<int> out;
    for (int a : s) {
        out.insert(mod(a, m));
        out.insert(mod(-a, m));
    }
    out.erase(0);
    return out;
}

void CirculantSpec::validate() const {
    require(n >= 3, "CirculantSpec: n must be at least 3");
    for (int j : jumps) require(j >= 1 && 2 * j <= n, "CirculantSpec: jump " + std::to_string(j) + " outside [1, n/2]");
}

void DihedralSpec::validate() const {
    require(m >= 3, "DihedralSpec: m must be at least 3");
    check_inverse_closed(rotations, m, "DihedralSpec rotations");
    for (int b : reflections)
        require(b >= 0 && b <= m - 1, "DihedralSpec reflections: element " + std::to_string(b) + " outside [0, m-1]");
}

void BicirculantSpec::validate() const {
    require(m >= 3, "BicirculantSpec: m must be at least 3");
    check_inverse_closed(s0, m, "BicirculantSpec s0");
    check_inverse_closed(s2, m, "BicirculantSpec s2");
    for (int b : s1) require(b >= 0 && b <= m - 1, "BicirculantSpec s1: element " + std::to_string(b) + " outside [0, m-1]");
}

BicirculantSpec BicirculantSpec::from_dihedral(const DihedralSpec& spec) {
    return BicirculantSpec{spec.m, spec.rotations, spec.reflections, spec.rotations};
}

Graph build_circulant(const CirculantSpec& spec) {
    spec.validate();
    Graph g(spec.n);
    fill_circulant_block(g, spec.n, 0, 0, symmetric_closure(spec.jumps, spec.n));
    return g;
}

Graph build_bicirculant(const BicirculantSpec& spec) {
    spec.validate();
    const int m = spec.m;
    Graph g(2 * m);
    fill_circulant_block(g, m, 0, 0, spec.s0);
    fill_circulant_block(g, m, m, 0, spec.s1);  // lower-left C(s1); symmetry supplies C(s1)^T
    fill_circulant_block(g, m, m, m, spec.s2);
    return g;
}

Graph build_dihedral(const DihedralSpec& spec) {
    spec.validate();
    // C(-refl) = C(refl)^T, so the Cayley graph is the bicirculant with s0 = s2.
    return build_bicirculant(BicirculantSpec::from_dihedral(spec));
}

Graph build_lcf(const LcfSpec& spec) {
    const int n = spec.n;
    require(n >= 4 && n % 2 == 0, "build_lcf: n must be even and at least 4");
    require(!spec.pattern.empty() && n % static_cast<int>(spec.pattern.size()) == 0,
            "build_lcf: pattern length must divide n");
    Graph g = cycle_graph(n);
    for (int i = 0; i < n; ++i) {
        const int off = mod(spec.pattern[i % spec.pattern.size()], n);
        require(off != 0, "build_lcf: chord at vertex " + std::to_string(i) + " is a self-loop");
        require(off != 1 && off != n - 1, "build_lcf: chord at vertex " + std::to_string(i) + " repeats a cycle edge");
        g.add_edge(i, (i + off) % n);
    }
    for (int v = 0; v < n; ++v)
        require(g.degree(v) == 3, "build_lcf: chords are inconsistent, vertex " + std::to_string(v) + " is not cubic");
    return g;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

std::optional<int> is_regular(const Graph& g) {
    if (g.order() == 0) return 0;
    const int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph cycle_graph(int n) {
    require(n >= 3, "cycle_graph: n must be at least 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph prism_graph(int k) {
    require(k >= 3, "prism_graph: k must be at least 3");
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) {
        g.add_edge(i, (i + 1) % k);
        g.add_edge(k + i, k + (i + 1) % k);
        g.add_edge(i, k + i);
    }
    return g;
}

}  // namespace nutforge
