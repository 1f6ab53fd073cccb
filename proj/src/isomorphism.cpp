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

#include "nutforge/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "nutforge/graph_io.hpp"

namespace nutforge {

namespace {

using Colouring = std::vector<int>;

// Replaces each colour by the rank of its signature among all signatures.
// The signature begins with the old colour, so the result refines the input.
int rerank(Colouring& colour, const std::vector<std::vector<int>>& sig) {
    const int n = static_cast<int>(colour.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = -1;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++rank;
        colour[order[i]] = rank;
    }
    return rank + 1;
}

class CanonicalSearch {
public:
    CanonicalSearch(const Graph& g, std::uint64_t budget) : g_(g), n_(g.order()), budget_(budget) {
        adj_.resize(n_);
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbours(v);
    }

    CanonicalForm run() {
        Colouring start(n_, 0);
        visit(start);
        CanonicalForm out;
        out.graph6 = best_key_;
        out.labelling = best_lab_;
        out.nodes_explored = nodes_;
        return out;
    }

private:
    int refine(Colouring& colour) const {
        int k = n_ == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
        std::vector<std::vector<int>> sig(n_);
        while (true) {
            for (int v = 0; v < n_; ++v) {
                sig[v].assign(k + 1, 0);
                sig[v][0] = colour[v];
                for (int u : adj_[v]) ++sig[v][colour[u] + 1];
            }
            const int next = rerank(colour, sig);
            if (next == k) return k;
            k = next;
        }
    }

    static Colouring individualize(const Colouring& colour, int w) {
        const int n = static_cast<int>(colour.size());
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) sig[v] = {colour[v], v == w ? 0 : 1};
        Colouring out = colour;
        rerank(out, sig);
        return out;
    }

    // Orbits of the group generated by the stored automorphisms that fix the
    // current path pointwise.
    std::vector<int> orbits() const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = true;
            for (int v : path_)
                if (gamma[v] != v) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
        }
        for (int v = 0; v < n_; ++v) parent[v] = find(v);
        return parent;
    }

    void leaf(const Colouring& colour) {
        std::string key = to_graph6(g_.relabel(colour));
        if (best_lab_.empty() || key < best_key_) {
            best_key_ = std::move(key);
            best_lab_ = colour;
        } else if (key == best_key_) {
            std::vector<int> inverse_best(n_);
            for (int v = 0; v < n_; ++v) inverse_best[best_lab_[v]] = v;
            std::vector<int> gamma(n_);
            for (int v = 0; v < n_; ++v) gamma[v] = inverse_best[colour[v]];
            automorphisms_.push_back(std::move(gamma));
        }
    }

    void visit(Colouring colour) {
        if (++nodes_ > budget_)
            throw SearchBudgetExceeded("canonical form: search budget of " + std::to_string(budget_) +
                                       " nodes exhausted");
        const int k = refine(colour);
        if (k == n_) {
            leaf(colour);
            return;
        }
        // Target cell: the smallest non-singleton cell, ties broken by colour.
        std::vector<int> size(k, 0);
        for (int c : colour) ++size[c];
        int target = -1;
        for (int c = 0; c < k; ++c)
            if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;

        std::vector<int> explored;
        for (int w = 0; w < n_; ++w) {
            if (colour[w] != target) continue;
            if (!explored.empty()) {
                const std::vector<int> orbit = orbits();
                if (std::any_of(explored.begin(), explored.end(), [&](int x) { return orbit[x] == orbit[w]; }))
                    continue;
            }
            explored.push_back(w);
            path_.push_back(w);
            visit(individualize(colour, w));
            path_.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    std::uint64_t budget_;
    std::vector<std::vector<int>> adj_;
    std::uint64_t nodes_ = 0;
    std::string best_key_;
    std::vector<int> best_lab_;
    std::vector<std::vector<int>> automorphisms_;
    std::vector<int> path_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::uint64_t node_budget) {
    if (g.order() == 0) return CanonicalForm{to_graph6(g), {}, 0};
    return CanonicalSearch(g, node_budget).run();
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b, std::uint64_t node_budget) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
    std::vector<int> da = a.degrees();
    std::vector<int> db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    const CanonicalForm ca = canonical_form(a, node_budget);
    const CanonicalForm cb = canonical_form(b, node_budget);
    if (ca.graph6 != cb.graph6) return std::nullopt;
    const int n = a.order();
    std::vector<int> inverse_b(n);
    for (int v = 0; v < n; ++v) inverse_b[cb.labelling[v]] = v;
    std::vector<int> phi(n);
    for (int v = 0; v < n; ++v) phi[v] = inverse_b[ca.labelling[v]];
    return phi;
}

bool are_isomorphic(const Graph& a, const Graph& b, std::uint64_t node_budget) {
    return find_isomorphism(a, b, node_budget).has_value();
}

}  // namespace nutforge
