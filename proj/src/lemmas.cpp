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

#include "nutforge/lemmas.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "nutforge/numtheory.hpp"
#include "nutforge/parallel.hpp"

namespace nutforge {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<FamilyTerm> kQ = {
    {1, 4, 7}, {-1, 4, 5}, {-1, 4, 4}, {2, 2, 4}, {1, 2, 3}, {1, 2, 2}, {1, 2, 0}, {-2, 1, 3}, {-1, 0, 2}, {-1, 0, 0},
};

const std::vector<FamilyTerm> kR = {
    {1, 8, 15},  {1, 8, 14},  {1, 8, 11},  {-1, 8, 10}, {-1, 8, 8}, {2, 6, 9},  {-1, 4, 15},
    {-1, 4, 11}, {-1, 4, 9},  {2, 4, 8},   {-2, 4, 7},  {1, 4, 6},  {1, 4, 4},  {1, 4, 0},
    {-2, 2, 6},  {1, 0, 7},   {1, 0, 5},   {-1, 0, 4},  {-1, 0, 1}, {-1, 0, 0},
};

const std::vector<FamilyTerm> kS = {
    {1, 4, 13}, {1, 4, 11},  {1, 4, 10}, {1, 4, 9},  {-1, 4, 8}, {-1, 2, 13}, {-1, 2, 10},
    {-1, 2, 9}, {3, 2, 7},   {1, 2, 5},  {-1, 2, 4}, {1, 2, 3},  {-1, 2, 2},  {1, 2, 1},
    {-2, 1, 6}, {1, 0, 6},   {-1, 0, 5}, {-1, 0, 1}, {-1, 0, 0},
};

const std::vector<FamilyTerm> kT = {
    {1, 8, 27},  {1, 8, 26},  {1, 8, 25},  {1, 8, 22},  {1, 8, 20},  {1, 8, 18},  {1, 8, 17},  {-1, 8, 16},
    {-1, 8, 15}, {2, 6, 15},  {-1, 4, 26}, {-1, 4, 25}, {1, 4, 23},  {-1, 4, 21}, {-1, 4, 20}, {1, 4, 19},
    {-1, 4, 18}, {-1, 4, 17}, {3, 4, 14},  {-3, 4, 13}, {1, 4, 10},  {1, 4, 9},   {-1, 4, 8},  {1, 4, 7},
    {1, 4, 6},   {-1, 4, 4},  {1, 4, 2},   {1, 4, 1},   {-2, 2, 12}, {1, 0, 12},  {1, 0, 11},  {-1, 0, 10},
    {-1, 0, 9},  {-1, 0, 7},  {-1, 0, 5},  {-1, 0, 2},  {-1, 0, 1},  {-1, 0, 0},
};

void fill_family_terms(FamilyTag tag, std::uint64_t t, std::vector<std::pair<std::uint64_t, std::int64_t>>& out) {
    out.clear();
    for (const auto& term : family_terms(tag)) out.emplace_back(term.t_mult * t + term.offset, term.coef);
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Per-index results gathered by the workers before the ordered merge.
struct IndexOutcome {
    IndexLine line;
    std::vector<Violation> violations;
};

void merge(VerificationReport& report, std::vector<IndexOutcome>& outcomes) {
    for (auto& o : outcomes) {
        report.indices_checked.push_back(o.line);
        std::sort(o.violations.begin(), o.violations.end(),
                  [](const Violation& a, const Violation& b) { return a.t < b.t; });
        for (auto& v : o.violations) report.violations.push_back(std::move(v));
    }
}

}  // namespace

FamilyId FamilyId::of(FamilyTag tag) {
    const bool two = tag == FamilyTag::Q || tag == FamilyTag::S;
    return FamilyId{tag, two ? 2u : 3u};
}

FamilyId FamilyId::parse(const std::string& name) {
    if (name == "Q" || name == "q") return of(FamilyTag::Q);
    if (name == "R" || name == "r") return of(FamilyTag::R);
    if (name == "S" || name == "s") return of(FamilyTag::S);
    if (name == "T" || name == "t") return of(FamilyTag::T);
    throw std::invalid_argument("unknown family '" + name + "' (expected Q, R, S or T)");
}

std::string FamilyId::name() const {
    switch (tag) {
        case FamilyTag::Q: return "Q";
        case FamilyTag::R: return "R";
        case FamilyTag::S: return "S";
        case FamilyTag::T: return "T";
    }
    return "?";
}

const std::vector<FamilyTerm>& family_terms(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Q: return kQ;
        case FamilyTag::R: return kR;
        case FamilyTag::S: return kS;
        case FamilyTag::T: return kT;
    }
    throw std::invalid_argument("family_terms: bad tag");
}

std::uint64_t unique_remainder_threshold(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Q: return 6;
        case FamilyTag::R: return 11;
        case FamilyTag::S: return 8;
        case FamilyTag::T: return 20;
    }
    return 0;
}

FeasibleIndexQuery family_case_constraints(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Q: return {{2, 3, 5, 7}, 8, 6, 2, false};
        case FamilyTag::R: return {primes_up_to(19), 18, 11, 3, true};
        case FamilyTag::S: return {primes_up_to(19), 17, 8, 2, false};
        case FamilyTag::T: return {primes_up_to(37), 36, 13, 3, true};
    }
    throw std::invalid_argument("family_case_constraints: bad tag");
}

IntPolynomial build_family(FamilyId f, std::uint64_t t) {
    IntPolynomial p;
    for (const auto& term : family_terms(f.tag)) p.add_term(term.coef, term.t_mult * t + term.offset);
    return p;
}

mpz_class family_root_at_one(FamilyId f, std::uint64_t t) {
    mpz_class sum = 0;
    const IntPolynomial p = build_family(f, t);
    for (const auto& [e, c] : p.terms()) sum += c;
    return sum;
}

std::uint64_t VerificationReport::total_checks() const {
    std::uint64_t n = 0;
    for (const auto& line : indices_checked) n += line.checks;
    return n;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "# " << suite << " family=" << family.name() << " range: " << parameter_range << '\n';
    for (const auto& line : indices_checked)
        out << family.name() << ' ' << suite << " index=" << line.index << " checks=" << line.checks
            << " failures=" << line.failures << '\n';
    for (const auto& v : violations)
        out << "VIOLATION " << family.name() << ' ' << suite << " index=" << v.index << " t=" << v.t << ": "
            << v.detail << '\n';
    for (const auto& note : notes) out << "# note: " << note << '\n';
    out << "# summary: " << suite << " family=" << family.name() << " indices=" << indices_checked.size()
        << " checks=" << total_checks() << " violations=" << violations.size()
        << " result=" << (success() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string VerificationReport::summary_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["family"] = family.name();
    j["parameter_range"] = parameter_range;
    j["indices"] = indices_checked.size();
    j["checks"] = total_checks();
    j["success"] = success();
    j["wall_seconds"] = wall_seconds;
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : violations) vs.push_back({{"index", v.index}, {"t", v.t}, {"detail", v.detail}});
    j["violations"] = vs;
    j["notes"] = notes;
    return j.dump();
}

VerificationReport verify_family_bounded(FamilyId f, std::uint64_t t_max, std::optional<std::uint64_t> min_b,
                                         unsigned jobs) {
    const auto start = Clock::now();
    const std::uint64_t lo = std::max<std::uint64_t>(1, min_b.value_or(f.min_b));
    VerificationReport report;
    report.suite = "bounded";
    report.family = f;
    report.parameter_range = "t in [0, " + std::to_string(t_max) + "], b >= " + std::to_string(lo) +
                             " with phi(b) <= deg";

    std::vector<IntPolynomial> polys;
    std::vector<std::uint64_t> degrees;
    for (std::uint64_t t = 0; t <= t_max; ++t) {
        polys.push_back(build_family(f, t));
        degrees.push_back(static_cast<std::uint64_t>(polys.back().degree()));
    }
    const std::uint64_t max_deg = *std::max_element(degrees.begin(), degrees.end());

    // phi(b) >= sqrt(b / 2), so phi(b) <= D forces b <= 2 D^2.
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t b = lo; b <= 2 * max_deg * max_deg + 2; ++b)
        if (euler_phi(b) <= max_deg) candidates.push_back(b);

    std::vector<IndexOutcome> outcomes(candidates.size());
    parallel_for(candidates.size(), jobs, [&](std::size_t i) {
        const std::uint64_t b = candidates[i];
        const std::uint64_t phi = euler_phi(b);
        CyclotomicDivisibility tester(b);
        IndexOutcome& o = outcomes[i];
        o.line.index = b;
        for (std::uint64_t t = 0; t <= t_max; ++t) {
            if (phi > degrees[t]) continue;
            ++o.line.checks;
            if (tester.divides(polys[t])) {
                ++o.line.failures;
                o.violations.push_back({t, b, "Phi_" + std::to_string(b) + " divides " + f.name() + "_" +
                                                  std::to_string(t)});
            }
        }
    });
    merge(report, outcomes);
    report.wall_seconds = seconds_since(start);
    return report;
}

bool unique_remainder_holds(FamilyTag tag, std::uint64_t beta, std::uint64_t t) {
    if (beta == 0) throw std::invalid_argument("unique_remainder_holds: beta must be positive");
    std::map<std::uint64_t, int> count;
    for (const auto& term : family_terms(tag)) ++count[(term.t_mult * t + term.offset) % beta];
    return std::any_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
}

VerificationReport verify_unique_remainder(FamilyId f, std::uint64_t beta_lo, std::uint64_t beta_hi, unsigned jobs) {
    const auto start = Clock::now();
    if (beta_lo == 0 || beta_lo > beta_hi) throw std::invalid_argument("verify_unique_remainder: empty beta range");
    VerificationReport report;
    report.suite = "unique-remainder";
    report.family = f;
    report.parameter_range = "beta in [" + std::to_string(beta_lo) + ", " + std::to_string(beta_hi) +
                             "], t in [0, beta)";
    const std::uint64_t threshold = unique_remainder_threshold(f.tag);
    if (beta_lo < threshold)
        report.notes.push_back("betas below " + std::to_string(threshold) + " lie below the family threshold");

    const std::size_t count = static_cast<std::size_t>(beta_hi - beta_lo + 1);
    std::vector<IndexOutcome> outcomes(count);
    parallel_for(count, jobs, [&](std::size_t i) {
        const std::uint64_t beta = beta_lo + i;
        IndexOutcome& o = outcomes[i];
        o.line.index = beta;
        for (std::uint64_t t = 0; t < beta; ++t) {
            ++o.line.checks;
            if (!unique_remainder_holds(f.tag, beta, t)) {
                ++o.line.failures;
                o.violations.push_back({t, beta, std::string("no exponent has a unique residue") +
                                                     (beta < threshold ? " (below threshold)" : "")});
            }
        }
    });
    merge(report, outcomes);
    report.wall_seconds = seconds_since(start);
    return report;
}

VerificationReport replicate_finite_case_analysis(FamilyId f, unsigned jobs) {
    const auto start = Clock::now();
    const FeasibleIndexQuery query = family_case_constraints(f.tag);
    const std::vector<std::uint64_t> indices = enumerate_feasible_indices(query);
    VerificationReport report;
    report.suite = "case-analysis";
    report.family = f;
    std::string primes;
    for (auto p : query.allowed_primes) primes += (primes.empty() ? "" : ",") + std::to_string(p);
    report.parameter_range = "b' >= " + std::to_string(query.min_b) + ", primes {" + primes +
                             "}, sum(p - 2) <= " + std::to_string(query.sum_bound) + ", b'/rad(b') < " +
                             std::to_string(query.rad_ratio_bound) + (query.forbid_four ? ", 4 does not divide b'" : "") +
                             "; t in [0, b')";
    report.notes.push_back("feasible indices: " + std::to_string(indices.size()) + ", ceiling " +
                           std::to_string(feasible_index_ceiling(query)));

    std::vector<IndexOutcome> outcomes(indices.size());
    // Hand out the largest indices first; they dominate the running time.
    std::vector<std::size_t> order(indices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
    parallel_for(order.size(), jobs, [&](std::size_t k) {
        const std::size_t i = order[k];
        const std::uint64_t b = indices[i];
        CyclotomicDivisibility tester(b);
        IndexOutcome& o = outcomes[i];
        o.line.index = b;
        std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
        for (std::uint64_t t = 0; t < b; ++t) {
            ++o.line.checks;
            fill_family_terms(f.tag, t, terms);
            if (tester.divides(terms)) {
                ++o.line.failures;
                o.violations.push_back({t, b, "Phi_" + std::to_string(b) + " divides " + f.name() + "_" +
                                                  std::to_string(t) + " mod x^" + std::to_string(b) + " - 1"});
            }
        }
    });
    merge(report, outcomes);
    report.wall_seconds = seconds_since(start);
    return report;
}

}  // namespace nutforge
