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

// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nutforge/constructions.hpp"
#include "nutforge/cyclotomic.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/isomorphism.hpp"
#include "nutforge/lemmas.hpp"
#include "nutforge/nut.hpp"
#include "nutforge/parallel.hpp"

using namespace nutforge;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void fail(const std::string& what) {
        pass = false;
        if (problems.size() < 8) problems.push_back(what);
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

// The case formula for vertex-transitive nut graphs, written out independently.
bool vt_nut_exists(long n, long d) {
    if (d % 2 != 0 || d < 4) return false;
    if (d % 4 == 0) return n % 2 == 0 && n >= d + 4;
    return n % 4 == 0 && n >= d + 6;
}

// Published counts of vertex-transitive nut graphs, orders 8, 10, ..., 46;
// -1 marks n <= d.
const std::map<int, std::vector<long>> kPublishedCounts = {
    {4, {1, 1, 2, 2, 4, 2, 7, 4, 7, 5, 8, 6, 8, 7, 12, 8, 15, 9, 14, 10}},
    {6, {0, 0, 1, 0, 4, 0, 15, 0, 39, 0, 55, 0, 72, 0, 105, 0, 224, 0, 265, 0}},
    {8, {-1, 0, 1, 3, 9, 14, 46, 38, 182, 92, 337, 180, 1152, 304, 1501, 476, 3344, 954, 3921, 1095}},
    {10, {-1, -1, 0, 0, 2, 0, 30, 0, 231, 0, 520, 0, 1826, 0, 4170, 0, 11046, 0, 17496, 0}},
    {12, {-1, -1, -1, 0, 1, 7, 41, 50, 337, 251, 1042, 1255, 6353, 2736, 12971, 7051, 52394, 23428, 76948, 34140}},
    {14, {-1, -1, -1, -1, 0, 0, 9, 0, 201, 0, 1085, 0, 8284, 0, 27709, 0, 116986, 0, 225700, 0}},
    {16, {-1, -1, -1, -1, -1, 0, 2, 9, 104, 147, 1134, 1293, 16569, 6607, 53738, 28713, 298855, 133196, 673180,
          324689}},
    {18, {-1, -1, -1, -1, -1, -1, 0, 0, 18, 0, 418, 0, 7178, 0, 40935, 0, 320178, 0, 909468, 0}},
    {20, {-1, -1, -1, -1, -1, -1, -1, 0, 2, 13, 164, 389, 4650, 4192, 37632, 34901, 381977, 278017, 1277372,
          1054239}},
    {22, {-1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 27, 0, 1232, 0, 21720, 0, 287618, 0, 1379665, 0}},
    {24, {-1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 3, 23, 417, 696, 10411, 12764, 222069, 211740, 1417958, 1244165}},
    {26, {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 28, 0, 2862, 0, 81731, 0, 781098, 0}},
    {28, {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 1, 23, 566, 1292, 31537, 43212, 388524, 537870}},
    {30, {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 55, 0, 5809, 0, 159876, 0}},
    {32, {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 4, 29, 1198, 2806, 53256, 81165}},
    {34, {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 80, 0, 9844, 0}},
    {36, {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 3, 54, 1378, 3790}},
    {38, {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 113, 0}},
    {40, {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 5, 43}},
    {42, {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0}},
    {44, {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0}},
};

std::string pair_str(long n, long d) { return "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")"; }

// Recomputes the nut property from scratch: A x = 0 for the returned kernel
// vector, no zero entry, and nullity one.
bool independently_nut(const Graph& g) {
    const NutCertificate c = nut_check_direct(g);
    if (!c.is_nut || c.nullity != 1 || !c.kernel_vector) return false;
    const auto& x = *c.kernel_vector;
    if (static_cast<int>(x.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (x[v] == 0) return false;
        mpq_class sum = 0;
        for (int u : g.neighbours(v)) sum += x[u];
        if (sum != 0) return false;
    }
    return true;
}

bool regular_of(const Graph& g, int d) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

Outcome feasibility_grid() {
    Outcome o;
    long cells = 0;
    for (long d = 0; d <= 40; ++d)
        for (long n = 1; n <= 120; ++n) {
            ++cells;
            const FeasibilityVerdict v = feasible_vt(n, d);
            o.expect(v.exists == vt_nut_exists(n, d), "verdict differs at " + pair_str(n, d));
            const FeasibilityCase want = (d % 2 != 0 || d < 4) ? FeasibilityCase::odd_or_small
                                         : d % 4 == 0           ? FeasibilityCase::d_div_4
                                                                : FeasibilityCase::d_2_mod_4;
            o.expect(v.case_ == want, "case label differs at " + pair_str(n, d));
        }
    long table_cells = 0;
    for (const auto& [d, row] : kPublishedCounts)
        for (std::size_t i = 0; i < row.size(); ++i) {
            const long n = 8 + 2 * static_cast<long>(i);
            ++table_cells;
            o.expect(feasible_vt(n, d).exists == (row[i] > 0), "published zero pattern differs at " + pair_str(n, d));
        }
    for (auto [n, d, want] : {std::tuple{8L, 4L, true}, {14L, 6L, false}, {12L, 6L, true}})
        o.expect(feasible_vt(n, d).exists == want, "spot check " + pair_str(n, d));
    o.expect(!feasible_vt(1, 0).exists && feasible_vt(1, 0).case_ == FeasibilityCase::odd_or_small, "degenerate input");
    o.detail = std::to_string(cells) + " grid cells, " + std::to_string(table_cells) + " published cells";
    return o;
}

Outcome constructive_sweep(unsigned jobs) {
    Outcome o;
    std::vector<std::pair<int, int>> pairs;
    for (int d = 6; d <= 30; d += 4)
        for (int n = d + 6; n <= d + 46; ++n)
            if (n % 4 == 0 && feasible_vt(n, d).exists) pairs.emplace_back(n, d);
    std::vector<std::string> errors(pairs.size());
    std::map<std::string, int> families;
    std::mutex mu;
    parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        const auto [n, d] = pairs[i];
        try {
            SearchOptions opts;
            const Witness w = construct(n, d, opts);
            if (w.graph.order() != n) errors[i] = "wrong order";
            else if (!regular_of(w.graph, d)) errors[i] = "not regular";
            else if (!independently_nut(w.graph)) errors[i] = "not nut";
            std::lock_guard lock(mu);
            families[w.recipe.substr(0, w.recipe.find(':'))]++;
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!errors[i].empty()) o.fail(pair_str(pairs[i].first, pairs[i].second) + ": " + errors[i]);
    std::ostringstream s;
    s << pairs.size() << " pairs;";
    for (const auto& [f, k] : families) s << ' ' << f << " x" << k;
    o.detail = s.str();
    return o;
}

Outcome four_divides_degree(unsigned jobs) {
    Outcome o;
    int prisms = 0;
    for (int d = 8; d <= 40; d += 8) {
        ++prisms;
        const Graph g = prism_complement_recipe(d).build();
        o.expect(g.order() == d + 4 && regular_of(g, d) && independently_nut(g),
                 "prism complement " + pair_str(d + 4, d));
        o.expect(are_isomorphic(g, complement(prism_graph((d + 4) / 2))),
                 "prism complement is not the complement of the prism at d=" + std::to_string(d));
    }
    std::vector<std::pair<int, int>> pairs;
    for (int d : {4, 12})
        for (int n = d + 4; n <= 24; n += 2) pairs.emplace_back(n, d);
    std::vector<std::string> errors(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        const auto [n, d] = pairs[i];
        const auto w = circulant_search(n, d, 2'000'000);
        if (!w) errors[i] = "no circulant witness";
        else if (w->graph.order() != n || !regular_of(w->graph, d) || !independently_nut(w->graph))
            errors[i] = "witness fails certification";
    });
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!errors[i].empty()) o.fail(pair_str(pairs[i].first, pairs[i].second) + ": " + errors[i]);
    o.detail = std::to_string(prisms) + " prism complements, " + std::to_string(pairs.size()) + " circulant searches";
    return o;
}

std::set<int> bits_to_set(unsigned mask, int width, int offset = 0) {
    std::set<int> s;
    for (int i = 0; i < width; ++i)
        if (mask >> i & 1u) s.insert(i + offset);
    return s;
}

Outcome spectral_agreement(unsigned jobs) {
    Outcome o;
    std::vector<BicirculantSpec> specs;
    long dihedral = 0;
    for (int m = 3; m <= 8; ++m) {
        const int half = m / 2;
        for (unsigned rmask = 0; rmask < (1u << half); ++rmask) {
            const std::set<int> rot = symmetric_closure(bits_to_set(rmask, half, 1), m);
            for (unsigned fmask = 0; fmask < (1u << m); ++fmask) {
                specs.push_back(BicirculantSpec::from_dihedral(DihedralSpec{m, rot, bits_to_set(fmask, m)}));
                ++dihedral;
            }
        }
    }
    std::mt19937_64 rng(20240917);
    const long random_count = 600;
    for (long k = 0; k < random_count; ++k) {
        const int m = std::uniform_int_distribution<int>(3, 16)(rng);
        auto symmetric = [&] {
            std::set<int> s;
            for (int a = 1; a <= m / 2; ++a)
                if (rng() & 1u) s.insert(a);
            return symmetric_closure(s, m);
        };
        BicirculantSpec b;
        b.m = m;
        b.s0 = symmetric();
        b.s2 = symmetric();
        for (int a = 0; a < m; ++a)
            if (rng() % 3 == 0) b.s1.insert(a);
        specs.push_back(b);
    }
    std::vector<std::string> errors(specs.size());
    parallel_for(specs.size(), jobs, [&](std::size_t i) {
        const BicirculantSpec& b = specs[i];
        const Graph g = build_bicirculant(b);
        for (int shift : {0, 1}) {
            const std::size_t direct = nullity_shifted(g, shift);
            const SpectralReport r = nut_check_spectral(b, shift);
            if (r.total_nullity != direct) {
                errors[i] = "m=" + std::to_string(b.m) + " shift " + std::to_string(shift) + ": spectral " +
                            std::to_string(r.total_nullity) + " vs direct " + std::to_string(direct);
                return;
            }
        }
        if (b.is_dihedral()) {
            const bool vt_one = nut_check_spectral(b, 0).nullity_one();
            if (vt_one != nut_check_direct(g).is_nut) errors[i] = "m=" + std::to_string(b.m) + ": nut verdicts differ";
        }
    });
    for (const auto& e : errors)
        if (!e.empty()) o.fail(e);
    o.detail = std::to_string(dihedral) + " dihedral and " + std::to_string(random_count) +
               " random bicirculant specs at shifts 0 and 1";
    return o;
}

Outcome named_graphs() {
    Outcome o;
    int count = 0;
    auto nut_regular = [&](const std::string& name, const Graph& g, int n, int d) {
        ++count;
        o.expect(g.order() == n, name + ": order");
        o.expect(regular_of(g, d), name + ": degree");
        o.expect(independently_nut(g), name + ": not nut");
    };
    nut_regular("Cay(Z8, {+-1, +-2})", build_circulant({8, {1, 2}}), 8, 4);
    nut_regular("Cay(Z10, {+-1, +-2})", build_circulant({10, {1, 2}}), 10, 4);
    nut_regular("Cay(Dih(6), {r^+-1, r^3, s, r^2 s, r^3 s})", build_dihedral({6, {1, 3, 5}, {0, 2, 3}}), 12, 6);
    const Graph prism6 = build_dihedral({6, {1, 5}, {0}});
    o.expect(are_isomorphic(prism6, prism_graph(6)), "Cay(Dih(6), {r^+-1, s}) is not the prism");
    nut_regular("complement of C6 x K2", complement(prism6), 12, 8);

    const Graph cay16 = build_dihedral({8, {1, 2, 3, 5, 6, 7}, {0, 2, 3, 4}});
    nut_regular("Cay(Dih(8), {r^+-1, r^+-2, r^+-3, s, r^2 s, r^3 s, r^4 s})", cay16, 16, 10);
    const Graph co16 = complement(build_dihedral({8, {4}, {1, 5, 6, 7}}));
    nut_regular("complement of Cay(Dih(8), {r^4, rs, r^5 s, r^6 s, r^7 s})", co16, 16, 10);
    o.expect(are_isomorphic(cay16, co16), "the two order-16 descriptions are not isomorphic");
    const Graph cay16_8 = build_dihedral({8, {1, 2, 3, 5, 6, 7}, {0, 2}});
    nut_regular("Cay(Dih(8), {r^+-1, r^+-2, r^+-3, s, r^2 s})", cay16_8, 16, 8);
    o.expect(cay16_8 == sporadic_spec(16, 8)->build(), "(16, 8) catalogue entry differs from the named graph");

    for (int m : {8, 12, 16}) {
        const Graph g = complement(build_circulant({2 * m, {1, m}}));
        nut_regular("Moebius complement order " + std::to_string(2 * m), g, 2 * m, 2 * m - 4);
    }
    nut_regular("complement of LCF [5,-5]^10", complement(build_lcf({20, {5, -5}})), 20, 16);
    nut_regular("complement of C10 x K2", complement(prism_graph(10)), 20, 16);

    const BicirculantSpec b36{18, {1, 17}, {0, 2}, {1, 2, 3, 15, 16, 17}};
    const Graph g36 = build_bicirculant(b36);
    ++count;
    bool degrees_ok = g36.order() == 36;
    for (int v = 0; v < g36.order(); ++v) degrees_ok = degrees_ok && g36.degree(v) == (v < 18 ? 4 : 8);
    o.expect(degrees_ok, "order-36 bicirculant: degrees");
    o.expect(nut_check_direct(g36).nullity == 1, "order-36 bicirculant: nullity");
    o.expect(independently_nut(g36), "order-36 bicirculant: not nut");

    o.detail = std::to_string(count) + " named graphs";
    return o;
}

Outcome lemma_suites(unsigned jobs) {
    Outcome o;
    std::ostringstream s;
    std::uint64_t checks = 0;
    for (FamilyTag tag : {FamilyTag::Q, FamilyTag::R, FamilyTag::S, FamilyTag::T}) {
        const FamilyId f = FamilyId::of(tag);
        o.expect(f.min_b == ((tag == FamilyTag::Q || tag == FamilyTag::S) ? 2u : 3u), f.name() + ": minimum index");
        const VerificationReport bounded = verify_family_bounded(f, 20, std::nullopt, jobs);
        const VerificationReport cases = replicate_finite_case_analysis(f, jobs);
        const VerificationReport unique = verify_unique_remainder(f, unique_remainder_threshold(tag), 300, jobs);
        o.expect(bounded.success(), f.name() + ": bounded check has violations");
        o.expect(cases.success(), f.name() + ": case analysis has violations");
        o.expect(unique.success(), f.name() + ": unique remainder has violations");
        o.expect(!cases.indices_checked.empty(), f.name() + ": no feasible indices");
        checks += bounded.total_checks() + cases.total_checks() + unique.total_checks();
    }
    o.expect(!unique_remainder_holds(FamilyTag::Q, 5, 0), "unique remainder unexpectedly holds for Q at beta=5, t=0");
    o.expect(!verify_unique_remainder(FamilyId::of(FamilyTag::Q), 5, 5).success(),
             "suite misses the failure below threshold");
    s << checks << " checks over four families";
    o.detail = s.str();
    return o;
}

std::uint64_t naive_phi(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

std::uint64_t naive_radical(std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (n % p == 0) {
            r *= p;
            while (n % p == 0) n /= p;
        }
    return r;
}

Outcome cyclotomic_identities() {
    Outcome o;
    long prime_reductions = 0;
    for (std::uint64_t n = 1; n <= 200; ++n) {
        IntPolynomial prod = IntPolynomial::constant(1);
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) prod = poly_mul(prod, cyclotomic(d));
        IntPolynomial want = IntPolynomial::monomial(1, n);
        want.add_term(-1, 0);
        o.expect(prod == want, "product of divisors at n=" + std::to_string(n));
        const IntPolynomial phi_n = cyclotomic(n);
        o.expect(phi_n.degree() == static_cast<std::int64_t>(naive_phi(n)), "degree at n=" + std::to_string(n));
        o.expect(phi_n.leading_coefficient() == 1, "not monic at n=" + std::to_string(n));
        for (std::uint64_t p = 2; p * p <= n; ++p) {
            if (naive_radical(p) != p || n % (p * p) != 0) continue;
            ++prime_reductions;
            o.expect(phi_n == cyclotomic(n / p).scale_exponents(p),
                     "prime reduction at n=" + std::to_string(n) + ", p=" + std::to_string(p));
        }
        const std::uint64_t r = naive_radical(n);
        o.expect(phi_n == cyclotomic(r).scale_exponents(n / r), "radical reduction at n=" + std::to_string(n));
        o.expect(rad_reduction_check(n), "library radical check at n=" + std::to_string(n));
    }
    o.detail = "n <= 200, " + std::to_string(prime_reductions) + " prime-square reductions";
    return o;
}

Outcome census_uniqueness(unsigned jobs) {
    Outcome o;
    for (int n : {8, 10}) {
        CensusOptions opts;
        opts.jobs = jobs;
        const CensusResult r = census(CensusFamily::circulant, n, 4, opts);
        o.expect(r.witnesses.size() == 1, "circulant census at n=" + std::to_string(n) + " found " +
                                              std::to_string(r.witnesses.size()) + " classes");
        if (!r.witnesses.empty())
            o.expect(are_isomorphic(r.witnesses.front().graph, build_circulant({n, {1, 2}})),
                     "class at n=" + std::to_string(n) + " is not Cay(Z_n, {+-1, +-2})");
    }
    o.detail = "(circulant, 8, 4) and (circulant, 10, 4)";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const unsigned jobs = resolve_jobs();
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"feasibility grid", feasibility_grid},
        {"constructive sweep, d = 2 (mod 4)", [&] { return constructive_sweep(jobs); }},
        {"coverage for 4 | d", [&] { return four_divides_degree(jobs); }},
        {"spectral and direct nullity agree", [&] { return spectral_agreement(jobs); }},
        {"named graphs certify", named_graphs},
        {"polynomial family suites", [&] { return lemma_suites(jobs); }},
        {"cyclotomic identities", cyclotomic_identities},
        {"circulant census uniqueness", [&] { return census_uniqueness(jobs); }},
    };

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const int id = static_cast<int>(k) + 1;
        if (!selected.empty() && !selected.count(id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[k].first << " ("
                  << o.detail << ", " << timing << ")\n";
        for (const auto& p : o.problems) std::cout << "    " << p << '\n';
        std::cout.flush();
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
