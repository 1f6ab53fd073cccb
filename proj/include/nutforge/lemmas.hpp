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
#include <string>
#include <vector>

#include "nutforge/cyclotomic.hpp"
#include "nutforge/poly.hpp"

namespace nutforge {

enum class FamilyTag { Q, R, S, T };

struct FamilyId {
    FamilyTag tag = FamilyTag::Q;
    std::uint64_t min_b = 2;  // 2 for Q and S, 3 for R and T

    static FamilyId of(FamilyTag tag);
    static FamilyId parse(const std::string& name);  // "Q", "R", "S" or "T"
    std::string name() const;
};

/// coef * x^(t_mult * t + offset).
struct FamilyTerm {
    int coef;
    std::uint64_t t_mult;
    std::uint64_t offset;
};

/// Terms of the family definition in their published order, before merging.
const std::vector<FamilyTerm>& family_terms(FamilyTag tag);

/// Threshold from which every exponent sequence has a unique residue.
std::uint64_t unique_remainder_threshold(FamilyTag tag);

/// Published constraints on the reduced index b' in the finite case analysis.
FeasibleIndexQuery family_case_constraints(FamilyTag tag);

IntPolynomial build_family(FamilyId f, std::uint64_t t);
mpz_class family_root_at_one(FamilyId f, std::uint64_t t);

struct Violation {
    std::uint64_t t = 0;
    std::uint64_t index = 0;  // b, beta or b' depending on the suite
    std::string detail;
};

struct IndexLine {
    std::uint64_t index = 0;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
};

struct VerificationReport {
    std::string suite;
    FamilyId family;
    std::string parameter_range;
    std::vector<IndexLine> indices_checked;  // ascending index
    std::vector<Violation> violations;       // ascending (index, t)
    std::vector<std::string> notes;
    double wall_seconds = 0;

    bool success() const { return violations.empty(); }
    std::uint64_t total_checks() const;
    std::string to_text() const;        // one line per index checked plus a summary
    std::string summary_json() const;   // counts and violation list
};

/// Phi_b does not divide the family polynomial for every t <= t_max and every
/// b >= min_b with phi(b) <= deg; min_b defaults to the family's.
VerificationReport verify_family_bounded(FamilyId f, std::uint64_t t_max,
                                         std::optional<std::uint64_t> min_b = std::nullopt, unsigned jobs = 1);

/// True when some exponent of the family sequence at t has a residue modulo
/// beta that no other exponent shares.
bool unique_remainder_holds(FamilyTag tag, std::uint64_t beta, std::uint64_t t);

/// Checks every beta in [beta_lo, beta_hi] and every t in [0, beta). Betas
/// below the threshold are checked too and noted as such.
VerificationReport verify_unique_remainder(FamilyId f, std::uint64_t beta_lo, std::uint64_t beta_hi,
                                           unsigned jobs = 1);

/// For every feasible b' and every t < b', Phi_{b'} does not divide the family
/// polynomial folded modulo x^{b'} - 1.
VerificationReport replicate_finite_case_analysis(FamilyId f, unsigned jobs = 1);

}  // namespace nutforge
