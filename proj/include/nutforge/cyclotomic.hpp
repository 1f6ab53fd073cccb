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
#include <vector>

#include "nutforge/numtheory.hpp"
#include "nutforge/poly.hpp"

namespace nutforge {

/// The n-th cyclotomic polynomial, by exact division of x^n - 1 by Phi_d over
/// the proper divisors d of n. Memoized; safe to call from several threads.
IntPolynomial cyclotomic(std::uint64_t n);

/// Dense coefficient vector of Phi_n (index = exponent), shared with the cache.
const std::vector<mpz_class>& cyclotomic_dense(std::uint64_t n);

/// Exact test of Phi_b | p.
///
/// p is first folded modulo x^b - 1 (Phi_b divides x^b - 1, so this does not
/// change the answer). The folded polynomial is evaluated at an element of
/// exact order b in F_q for primes q = 1 (mod b); Phi_b splits over F_q, so a
/// nonzero value proves non-divisibility. If the first few primes all vanish the
/// answer is settled exactly: by dense division for small phi(b), otherwise by
/// accumulating primes until their product exceeds the norm bound
/// |N(p(zeta))| <= ||p||_1^phi(b).
///
/// One instance caches its primes and power tables for repeated queries with
/// the same b. Instances are not thread-safe; use one per thread.
class CyclotomicDivisibility {
public:
    explicit CyclotomicDivisibility(std::uint64_t b);

    std::uint64_t index() const { return b_; }
    std::uint64_t phi() const { return phi_; }

    bool divides(const IntPolynomial& p);

    /// Fast path for lacunary inputs with machine-size coefficients; exponents
    /// may be arbitrary and are folded modulo b.
    bool divides(const std::vector<std::pair<std::uint64_t, std::int64_t>>& terms);

private:
    struct Field {
        std::uint64_t q = 0;
        std::uint64_t omega = 0;
        std::vector<std::uint64_t> powers;  // omega^e for e < b, empty when b is large
    };

    Field make_field(std::uint64_t q) const;
    std::uint64_t next_prime();
    const Field& field(std::size_t i);
    std::uint64_t eval(const Field& f, const IntPolynomial& folded) const;
    bool settle_exactly(const IntPolynomial& folded);

    std::uint64_t b_;
    std::uint64_t phi_;
    std::vector<std::uint64_t> prime_divisors_;
    std::uint64_t next_k_;
    std::vector<Field> fields_;
};

bool divides_cyclotomic(const IntPolynomial& p, std::uint64_t b);

/// Checks Phi_n(x) == Phi_rad(n)(x^(n / rad(n))).
bool rad_reduction_check(std::uint64_t n);

/// Entry j holds the terms of p whose exponent is congruent to j modulo beta.
std::vector<IntPolynomial> residue_split(const IntPolynomial& p, std::uint64_t beta);

/// True iff sum over primes of (p - 2) exceeds term_count - 2, the hypothesis
/// under which one full prime power may be cancelled from a cyclotomic index
/// dividing a polynomial with term_count nonzero terms.
bool fs_hypothesis(std::uint64_t term_count, const std::vector<std::uint64_t>& primes);

struct FeasibleIndexQuery {
    std::vector<std::uint64_t> allowed_primes;
    std::uint64_t sum_bound = 0;        // sum over distinct primes of (p - 2) <= sum_bound
    std::uint64_t rad_ratio_bound = 0;  // b / rad(b) < rad_ratio_bound
    std::uint64_t min_b = 1;
    bool forbid_four = false;           // reject 4 | b
};

/// Largest b that could satisfy the query: max over admissible prime subsets of
/// their product times (rad_ratio_bound - 1). Every feasible index is at most this.
std::uint64_t feasible_index_ceiling(const FeasibleIndexQuery& query);

/// Every b in [min_b, ceiling] meeting the query, ascending. The scan is
/// exhaustive over the ceiling.
std::vector<std::uint64_t> enumerate_feasible_indices(const FeasibleIndexQuery& query);

}  // namespace nutforge
