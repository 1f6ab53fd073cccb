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
#include <utility>
#include <variant>
#include <vector>

#include "nutforge/graph.hpp"
#include "nutforge/nut.hpp"

namespace nutforge {

enum class FeasibilityCase { odd_or_small, d_div_4, d_2_mod_4 };

std::string to_string(FeasibilityCase c);

struct FeasibilityVerdict {
    bool exists = false;
    FeasibilityCase case_ = FeasibilityCase::odd_or_small;
    std::string reason;
};

/// Whether a d-regular vertex-transitive nut graph of order n exists.
FeasibilityVerdict feasible_vt(long n, long d);

/// A reproducible description of a witness: a base graph, optionally complemented.
struct Recipe {
    std::string family;
    std::variant<CirculantSpec, DihedralSpec, LcfSpec> base;
    bool complement = false;

    Graph build() const;
    std::string describe() const;
};

struct Witness {
    Graph graph;
    std::string recipe;
    NutCertificate certificate;
};

class InfeasiblePair : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// rot {+-1, ..., +-(2t+1)}, refl {0, 1, 4, 6} U [8, 4t+7]; (8t+6)-regular.
DihedralSpec prop1_spec(int t, int m);
/// rot {+-1, ..., +-(2t+1)}, refl {0, 1, 2, 5, 7, 9, 10} U [13, 4t+13]; (8t+10)-regular.
DihedralSpec prop2_spec(int t, int m);

/// Base specs whose complements are d-regular nut graphs of order d + 6,
/// d + 10 and d + 14. The flag is always true (witness = complement).
std::pair<DihedralSpec, bool> prop3_complement_spec(int d);
std::pair<DihedralSpec, bool> prop4_complement_spec(int d);
std::pair<DihedralSpec, bool> prop5_complement_spec(int d);

/// Complement of the prism C_{(d+4)/2} x K_2 written as Cay(Dih((d+4)/2), {r^+-1, s}).
Recipe prism_complement_recipe(int d);

std::optional<Recipe> sporadic_spec(int n, int d);

/// The recipe the dispatcher would use, before searching. Absent for pairs
/// that fall through to search.
std::optional<Recipe> construction_recipe(int n, int d);

struct SearchOptions {
    std::uint64_t circulant_limit = 2'000'000;  // candidate connection sets
    std::uint64_t dihedral_limit = 2'000'000;
    unsigned jobs = 1;
};

/// Certified witness for a feasible pair. Throws InfeasiblePair or SearchExhausted.
Witness construct(int n, int d, const SearchOptions& options = {});

/// Jump sets in lexicographic order of their sorted element lists.
std::optional<Witness> circulant_search(int n, int d, std::uint64_t limit, unsigned jobs = 1);

/// Rotation half-sets by increasing bitmask, each with reflection sets in
/// lexicographic order.
std::optional<Witness> dihedral_search(int n, int d, std::uint64_t limit, unsigned jobs = 1);

enum class CensusFamily { circulant, dihedral };

CensusFamily parse_census_family(const std::string& name);

struct CensusOptions {
    bool dedup = true;
    std::uint64_t candidate_limit = 50'000'000;
    std::uint64_t canonical_budget = 2'000'000;
    unsigned jobs = 1;
};

struct CensusResult {
    std::vector<Witness> witnesses;    // enumeration order, one per class when deduplicated
    std::uint64_t candidates = 0;      // connection sets examined
    std::uint64_t nut_specs = 0;       // candidates certified nut before deduplication
};

/// All nut graphs of the family at (n, d). Deduplication needs n <= 20.
CensusResult census(CensusFamily family, int n, int d, const CensusOptions& options = {});

}  // namespace nutforge
