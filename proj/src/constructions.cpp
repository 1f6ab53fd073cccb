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

#include "nutforge/constructions.hpp"

#include <map>

#include "nutforge/graph_io.hpp"
#include "nutforge/isomorphism.hpp"
#include "nutforge/parallel.hpp"

namespace nutforge {

namespace {

constexpr std::size_t kSearchBatch = 512;

std::set<int> range(int lo, int hi) {
    std::set<int> s;
    for (int i = lo; i <= hi; ++i) s.insert(i);
    return s;
}

std::set<int> symmetric_range(int k, int m) {
    std::set<int> s;
    for (int a = 1; a <= k; ++a) s.insert({a, m - a});
    return s;
}

// Advances a strictly increasing index vector over [0, n) in lexicographic
// order. Returns false after the last combination.
bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

std::vector<int> first_combination(int k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

std::string lcf_string(const LcfSpec& s) {
    std::string out = "lcf n=" + std::to_string(s.n) + " [";
    for (std::size_t i = 0; i < s.pattern.size(); ++i) out += (i ? "," : "") + std::to_string(s.pattern[i]);
    return out + "]^" + std::to_string(s.n / static_cast<int>(s.pattern.size()));
}

Witness certify(Graph g, std::string recipe) {
    Witness w{std::move(g), std::move(recipe), {}};
    w.certificate = nut_check_direct(w.graph);
    return w;
}

// Lazily produces circulant candidates of degree d on n vertices.
class CirculantEnumerator {
public:
    CirculantEnumerator(int n, int d) : n_(n) {
        if (n < 3 || d < 0 || d > n - 1) {
            done_ = true;
            return;
        }
        if (d % 2 == 0) {
            pool_ = (n - 1) / 2;  // jumps 1..pool_, excluding n/2
            k_ = d / 2;
        } else {
            if (n % 2 != 0) {
                done_ = true;
                return;
            }
            pool_ = n / 2 - 1;
            k_ = (d - 1) / 2;
            half_ = true;
        }
        if (k_ > pool_) done_ = true;
        idx_ = first_combination(k_);
    }

    std::optional<CirculantSpec> next() {
        if (done_) return std::nullopt;
        CirculantSpec spec{n_, {}};
        for (int i : idx_) spec.jumps.insert(i + 1);
        if (half_) spec.jumps.insert(n_ / 2);
        if (!next_combination(idx_, pool_)) done_ = true;
        return spec;
    }

private:
    int n_;
    int pool_ = 0;
    int k_ = 0;
    bool half_ = false;
    bool done_ = false;
    std::vector<int> idx_;
};

// Lazily produces dihedral candidates of degree d on n = 2m vertices.
class DihedralEnumerator {
public:
    DihedralEnumerator(int n, int d) : m_(n / 2), d_(d) {
        if (n % 2 != 0 || m_ < 3 || d < 0 || d > n - 1) {
            done_ = true;
            return;
        }
        halves_ = m_ / 2;
        if (halves_ > 30) throw std::invalid_argument("dihedral search: order too large");
        advance_mask(0);
    }

    std::optional<DihedralSpec> next() {
        if (done_) return std::nullopt;
        DihedralSpec spec{m_, rotations_, {}};
        for (int i : refl_) spec.reflections.insert(i);
        if (!next_combination(refl_, m_)) advance_mask(mask_ + 1);
        return spec;
    }

private:
    // Moves to the first rotation mask >= from whose reflection count fits.
    void advance_mask(std::uint64_t from) {
        for (mask_ = from; mask_ < (std::uint64_t{1} << halves_); ++mask_) {
            rotations_.clear();
            for (int a = 1; a <= halves_; ++a)
                if (mask_ >> (a - 1) & 1) rotations_.insert({a, m_ - a});
            const int r = d_ - static_cast<int>(rotations_.size());
            if (r >= 0 && r <= m_) {
                refl_ = first_combination(r);
                return;
            }
        }
        done_ = true;
    }

    int m_;
    int d_;
    int halves_ = 0;
    std::uint64_t mask_ = 0;
    std::set<int> rotations_;
    std::vector<int> refl_;
    bool done_ = false;
};

// Pulls candidates in batches, prefilters them spectrally in parallel and
// certifies the survivors in enumeration order.
template <typename Enumerator, typename Spectral, typename Build>
std::optional<Witness> batched_search(Enumerator& en, std::uint64_t limit, unsigned jobs, Spectral spectral_one,
                                      Build build, const std::string& family) {
    std::uint64_t seen = 0;
    while (seen < limit) {
        std::vector<typename decltype(en.next())::value_type> batch;
        while (batch.size() < kSearchBatch && seen < limit) {
            auto spec = en.next();
            if (!spec) break;
            batch.push_back(std::move(*spec));
            ++seen;
        }
        if (batch.empty()) return std::nullopt;
        std::vector<char> hit(batch.size(), 0);
        parallel_for(batch.size(), jobs, [&](std::size_t i) { hit[i] = spectral_one(batch[i]) ? 1 : 0; });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (!hit[i]) continue;
            Witness w = certify(build(batch[i]), family + ": " + to_string(GraphSpec(batch[i])));
            if (w.certificate.is_nut) return w;
        }
    }
    return std::nullopt;
}

bool circulant_spectral_one(const CirculantSpec& s) { return circulant_nullity(s, 0) == 1; }

bool dihedral_spectral_one(const DihedralSpec& s) {
    return nut_check_spectral(BicirculantSpec::from_dihedral(s), 0).total_nullity == 1;
}

}  // namespace

std::string to_string(FeasibilityCase c) {
    switch (c) {
        case FeasibilityCase::odd_or_small: return "odd-or-small";
        case FeasibilityCase::d_div_4: return "d-div-4";
        case FeasibilityCase::d_2_mod_4: return "d-2-mod-4";
    }
    return "unknown";
}

FeasibilityVerdict feasible_vt(long n, long d) {
    FeasibilityVerdict v;
    if (d < 4 || d % 2 != 0) {
        v.case_ = FeasibilityCase::odd_or_small;
        v.reason = d < 4 ? "degree below 4 admits no regular nut graph" : "odd degree admits no vertex-transitive nut graph";
        return v;
    }
    if (d % 4 == 0) {
        v.case_ = FeasibilityCase::d_div_4;
        if (n % 2 != 0)
            v.reason = "order must be even";
        else if (n < d + 4)
            v.reason = "order must be at least d + 4";
        else
            v.exists = true;
    } else {
        v.case_ = FeasibilityCase::d_2_mod_4;
        if (n % 4 != 0)
            v.reason = "for d = 2 (mod 4) the order must be divisible by 4";
        else if (n < d + 6)
            v.reason = "for d = 2 (mod 4) the order must be at least d + 6";
        else
            v.exists = true;
    }
    if (v.exists) v.reason = "n = " + std::to_string(n) + ", d = " + std::to_string(d) + " meets the conditions";
    return v;
}

Graph Recipe::build() const {
    struct Visitor {
        Graph operator()(const CirculantSpec& s) const { return build_circulant(s); }
        Graph operator()(const DihedralSpec& s) const { return build_dihedral(s); }
        Graph operator()(const LcfSpec& s) const { return build_lcf(s); }
    };
    Graph g = std::visit(Visitor{}, base);
    return complement ? nutforge::complement(g) : g;
}

std::string Recipe::describe() const {
    struct Visitor {
        std::string operator()(const CirculantSpec& s) const { return to_string(GraphSpec(s)); }
        std::string operator()(const DihedralSpec& s) const { return to_string(GraphSpec(s)); }
        std::string operator()(const LcfSpec& s) const { return lcf_string(s); }
    };
    const std::string body = std::visit(Visitor{}, base);
    return family + ": " + (complement ? "complement of " + body : body);
}

DihedralSpec prop1_spec(int t, int m) {
    if (t < 0 || m % 2 != 0 || m < 4 * t + 8) throw std::invalid_argument("prop1_spec: need t >= 0, m even, m >= 4t + 8");
    std::set<int> refl{0, 1, 4, 6};
    for (int b : range(8, 4 * t + 7)) refl.insert(b);
    return DihedralSpec{m, symmetric_range(2 * t + 1, m), refl};
}

DihedralSpec prop2_spec(int t, int m) {
    if (t < 0 || m % 2 != 0 || m < 4 * t + 14)
        throw std::invalid_argument("prop2_spec: need t >= 0, m even, m >= 4t + 14");
    std::set<int> refl{0, 1, 2, 5, 7, 9, 10};
    for (int b : range(13, 4 * t + 13)) refl.insert(b);
    return DihedralSpec{m, symmetric_range(2 * t + 1, m), refl};
}

std::pair<DihedralSpec, bool> prop3_complement_spec(int d) {
    if (d < 14 || d % 4 != 2) throw std::invalid_argument("prop3_complement_spec: need d >= 14, d = 2 (mod 4)");
    const int m = (d + 6) / 2;
    return {DihedralSpec{m, {2, m - 2}, {0, 8, 9}}, true};
}

std::pair<DihedralSpec, bool> prop4_complement_spec(int d) {
    if (d < 22 || d % 4 != 2) throw std::invalid_argument("prop4_complement_spec: need d >= 22, d = 2 (mod 4)");
    const int m = (d + 10) / 2;
    return {DihedralSpec{m, {2, 4, m - 4, m - 2}, {0, 2, 6, 7, 15}}, true};
}

std::pair<DihedralSpec, bool> prop5_complement_spec(int d) {
    if (d < 26 || d % 4 != 2) throw std::invalid_argument("prop5_complement_spec: need d >= 26, d = 2 (mod 4)");
    const int m = (d + 14) / 2;
    return {DihedralSpec{m, {2, 4, 7, m - 7, m - 4, m - 2}, {0, 2, 6, 7, 14, 17, 19}}, true};
}

Recipe prism_complement_recipe(int d) {
    if (d < 8 || d % 8 != 0) throw std::invalid_argument("prism_complement_recipe: need 8 | d, d >= 8");
    const int m = (d + 4) / 2;
    return Recipe{"prism-complement", DihedralSpec{m, {1, m - 1}, {0}}, true};
}

std::optional<Recipe> sporadic_spec(int n, int d) {
    if (n == 12 && d == 6) return Recipe{"sporadic", DihedralSpec{6, {1, 3, 5}, {0, 2, 3}}, false};
    if (d == 10 && (n == 16 || n == 20 || n == 24)) {
        const int m = n / 2;
        return Recipe{"sporadic", DihedralSpec{m, symmetric_range(3, m), {0, 2, 3, 4}}, false};
    }
    if (d == 18 && (n == 28 || n == 32)) {
        const int m = n / 2;
        return Recipe{"sporadic", DihedralSpec{m, symmetric_range(5, m), {0, 2, 3, 4, 5, 6, 7, 8}}, false};
    }
    if (n == 16 && d == 8) return Recipe{"sporadic", DihedralSpec{8, symmetric_range(3, 8), {0, 2}}, false};
    if (n == 20 && d == 16) return Recipe{"sporadic", LcfSpec{20, {5, -5}}, true};
    if (n % 2 == 0 && d == n - 4 && (n / 2) % 4 == 0 && n >= 8)
        return Recipe{"mobius-complement", CirculantSpec{n, {1, n / 2}}, true};
    return std::nullopt;
}

std::optional<Recipe> construction_recipe(int n, int d) {
    if (auto r = sporadic_spec(n, d)) return r;
    if (d % 4 == 2) {
        if (d % 8 == 6) {
            const int t = (d - 6) / 8;
            if (n >= 2 * (4 * t + 8)) return Recipe{"prop1 t=" + std::to_string(t), prop1_spec(t, n / 2), false};
        } else if (d >= 10) {
            const int t = (d - 10) / 8;
            if (n >= 2 * (4 * t + 14)) return Recipe{"prop2 t=" + std::to_string(t), prop2_spec(t, n / 2), false};
        }
        if (n - d == 6 && d >= 14) return Recipe{"prop3", prop3_complement_spec(d).first, true};
        if (n - d == 10 && d >= 22) return Recipe{"prop4", prop4_complement_spec(d).first, true};
        if (n - d == 14 && d >= 26) return Recipe{"prop5", prop5_complement_spec(d).first, true};
        return std::nullopt;
    }
    if (d % 8 == 0 && n == d + 4) return prism_complement_recipe(d);
    return std::nullopt;
}

Witness construct(int n, int d, const SearchOptions& options) {
    const FeasibilityVerdict v = feasible_vt(n, d);
    if (!v.exists) throw InfeasiblePair("no " + std::to_string(d) + "-regular vertex-transitive nut graph of order " +
                                        std::to_string(n) + ": " + v.reason);
    if (auto recipe = construction_recipe(n, d)) {
        Witness w = certify(recipe->build(), recipe->describe());
        if (!w.certificate.is_nut) throw std::logic_error("construct: recipe failed certification: " + w.recipe);
        return w;
    }
    if (auto w = circulant_search(n, d, options.circulant_limit, options.jobs)) return *w;
    if (auto w = dihedral_search(n, d, options.dihedral_limit, options.jobs)) return *w;
    throw SearchExhausted("no witness found within bounds for n = " + std::to_string(n) + ", d = " + std::to_string(d));
}

std::optional<Witness> circulant_search(int n, int d, std::uint64_t limit, unsigned jobs) {
    CirculantEnumerator en(n, d);
    return batched_search(en, limit, jobs, circulant_spectral_one,
                          [](const CirculantSpec& s) { return build_circulant(s); }, "circulant-search");
}

std::optional<Witness> dihedral_search(int n, int d, std::uint64_t limit, unsigned jobs) {
    DihedralEnumerator en(n, d);
    return batched_search(en, limit, jobs, dihedral_spectral_one,
                          [](const DihedralSpec& s) { return build_dihedral(s); }, "dihedral-search");
}

CensusFamily parse_census_family(const std::string& name) {
    if (name == "circulant") return CensusFamily::circulant;
    if (name == "dihedral") return CensusFamily::dihedral;
    throw std::invalid_argument("unknown census family '" + name + "' (expected circulant or dihedral)");
}

namespace {

template <typename Enumerator, typename Spectral, typename Build>
CensusResult run_census(Enumerator& en, const CensusOptions& opt, Spectral spectral_one, Build build,
                        const std::string& family) {
    CensusResult result;
    std::map<std::string, bool> seen_classes;
    while (true) {
        std::vector<typename decltype(en.next())::value_type> batch;
        while (batch.size() < kSearchBatch) {
            auto spec = en.next();
            if (!spec) break;
            if (++result.candidates > opt.candidate_limit)
                throw SearchBudgetExceeded("census: candidate limit of " + std::to_string(opt.candidate_limit) +
                                           " exceeded");
            batch.push_back(std::move(*spec));
        }
        if (batch.empty()) break;
        std::vector<std::optional<Witness>> found(batch.size());
        std::vector<std::string> keys(batch.size());
        parallel_for(batch.size(), opt.jobs, [&](std::size_t i) {
            if (!spectral_one(batch[i])) return;
            Witness w = certify(build(batch[i]), family + ": " + to_string(GraphSpec(batch[i])));
            if (!w.certificate.is_nut) return;
            if (opt.dedup) keys[i] = canonical_form(w.graph, opt.canonical_budget).graph6;
            found[i] = std::move(w);
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (!found[i]) continue;
            ++result.nut_specs;
            if (opt.dedup && !seen_classes.emplace(keys[i], true).second) continue;
            result.witnesses.push_back(std::move(*found[i]));
        }
    }
    return result;
}

}  // namespace

CensusResult census(CensusFamily family, int n, int d, const CensusOptions& options) {
    if (options.dedup && n > 20)
        throw std::invalid_argument("census: isomorphism deduplication is limited to n <= 20; use --no-dedup");
    if (family == CensusFamily::circulant) {
        CirculantEnumerator en(n, d);
        return run_census(en, options, circulant_spectral_one, [](const CirculantSpec& s) { return build_circulant(s); },
                          "circulant");
    }
    DihedralEnumerator en(n, d);
    return run_census(en, options, dihedral_spectral_one, [](const DihedralSpec& s) { return build_dihedral(s); },
                      "dihedral");
}

}  // namespace nutforge
