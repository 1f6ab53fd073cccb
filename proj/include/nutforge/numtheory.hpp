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
#include <utility>
#include <vector>

namespace nutforge {

using PrimePower = std::pair<std::uint64_t, unsigned>;  // (prime, exponent)

std::vector<PrimePower> factorize(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);  // ascending
bool is_prime(std::uint64_t n);                        // deterministic for 64-bit
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Index b together with its factorization and radical.
struct CycIndex {
    std::uint64_t b = 1;
    std::uint64_t radical = 1;
    std::vector<PrimePower> prime_factorization;

    static CycIndex of(std::uint64_t b);
    std::uint64_t phi() const;                        // from the stored factorization
    std::uint64_t rad_ratio() const { return b / radical; }
};

}  // namespace nutforge
