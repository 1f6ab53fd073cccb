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

#include "nutforge/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>

namespace nutforge {

namespace {

constexpr std::size_t kInitialFields = 3;
constexpr std::uint64_t kDenseSettleMaxPhi = 4096;
constexpr std::uint64_t kPowerTableMaxIndex = std::uint64_t{1} << 21;

struct CyclotomicCache {
    std::shared_mutex mutex;
    std::map<std::uint64_t, std::unique_ptr<const std::vector<mpz_class>>> dense;
};

CyclotomicCache& cache() {
    static CyclotomicCache c;
    return c;
}

std::vector<mpz_class> compute_cyclotomic_dense(std::uint64_t n) {
    std::vector<mpz_class> num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (std::uint64_t d : divisors(n)) {
        if (d == n) break;
        std::vector<mpz_class> quo = dense_divide_monic(num, cyclotomic_dense(d));
        for (const auto& r : num)
            if (r != 0) throw std::logic_error("cyclotomic: inexact division");
        num = std::move(quo);
    }
    return num;
}

std::uint64_t reduce_mod(const mpz_class& c, std::uint64_t q) {
    return mpz_fdiv_ui(c.get_mpz_t(), q);
}

std::uint64_t reduce_mod(std::int64_t c, std::uint64_t q) {
    if (c >= 0) return static_cast<std::uint64_t>(c) % q;
    const std::uint64_t m = static_cast<std::uint64_t>(-(c + 1)) + 1;
    const std::uint64_t r = m % q;
    return r == 0 ? 0 : q - r;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_dense(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic: index must be positive");
    auto& c = cache();
    {
        std::shared_lock lock(c.mutex);
        auto it = c.dense.find(n);
        if (it != c.dense.end()) return *it->second;
    }
    auto built = std::make_unique<const std::vector<mpz_class>>(compute_cyclotomic_dense(n));
    std::unique_lock lock(c.mutex);
    auto [it, inserted] = c.dense.try_emplace(n, std::move(built));
    return *it->second;
}

IntPolynomial cyclotomic(std::uint64_t n) { return from_dense(cyclotomic_dense(n)); }

CyclotomicDivisibility::CyclotomicDivisibility(std::uint64_t b) : b_(b) {
    if (b == 0) throw std::invalid_argument("CyclotomicDivisibility: index must be positive");
    const CycIndex idx = CycIndex::of(b);
    phi_ = idx.phi();
    for (const auto& [p, e] : idx.prime_factorization) prime_divisors_.push_back(p);
    next_k_ = ((std::uint64_t{1} << 62) - 1) / b;
}

std::uint64_t CyclotomicDivisibility::next_prime() {
    while (next_k_ > 0) {
        const std::uint64_t q = next_k_ * b_ + 1;
        --next_k_;
        if (is_prime(q)) return q;
    }
    throw std::runtime_error("CyclotomicDivisibility: ran out of primes");
}

CyclotomicDivisibility::Field CyclotomicDivisibility::make_field(std::uint64_t q) const {
    Field f;
    f.q = q;
    const std::uint64_t k = (q - 1) / b_;
    for (std::uint64_t g = 2;; ++g) {
        const std::uint64_t w = pow_mod(g, k, q);
        bool exact_order = true;
        for (std::uint64_t p : prime_divisors_) {
            if (pow_mod(w, b_ / p, q) == 1) {
                exact_order = false;
                break;
            }
        }
        if (exact_order) {
            f.omega = w;
            break;
        }
    }
    if (fields_.empty() && b_ <= kPowerTableMaxIndex) {
        f.powers.resize(b_);
        std::uint64_t acc = 1;
        for (std::uint64_t e = 0; e < b_; ++e) {
            f.powers[e] = acc;
            acc = mul_mod(acc, f.omega, q);
        }
    }
    return f;
}

const CyclotomicDivisibility::Field& CyclotomicDivisibility::field(std::size_t i) {
    while (fields_.size() <= i) fields_.push_back(make_field(next_prime()));
    return fields_[i];
}

std::uint64_t CyclotomicDivisibility::eval(const Field& f, const IntPolynomial& folded) const {
    std::uint64_t acc = 0;
    for (const auto& [e, c] : folded.terms()) {
        const std::uint64_t w = f.powers.empty() ? pow_mod(f.omega, e, f.q) : f.powers[e];
        acc += mul_mod(reduce_mod(c, f.q), w, f.q);
        if (acc >= f.q) acc -= f.q;
    }
    return acc;
}

bool CyclotomicDivisibility::settle_exactly(const IntPolynomial& folded) {
    if (folded.is_zero()) return true;
    if (phi_ <= kDenseSettleMaxPhi) {
        std::vector<mpz_class> num = to_dense(folded);
        dense_divide_monic(num, cyclotomic_dense(b_));
        for (const auto& r : num)
            if (r != 0) return false;
        return true;
    }
    mpz_class l1 = 0;
    for (const auto& [e, c] : folded.terms()) l1 += abs(c);
    const double log2_bound = static_cast<double>(phi_) * std::log2(l1.get_d());
    double log2_product = 0;
    for (std::size_t i = 0;; ++i) {
        const Field& f = field(i);
        if (eval(f, folded) != 0) return false;
        log2_product += std::log2(static_cast<double>(f.q)) - 1e-9;
        if (log2_product > log2_bound + 1) return true;
    }
}

bool CyclotomicDivisibility::divides(const IntPolynomial& p) {
    const IntPolynomial folded = poly_cyclic_reduce(p, b_);
    if (folded.is_zero()) return true;
    for (std::size_t i = 0; i < kInitialFields; ++i)
        if (eval(field(i), folded) != 0) return false;
    return settle_exactly(folded);
}

bool CyclotomicDivisibility::divides(const std::vector<std::pair<std::uint64_t, std::int64_t>>& terms) {
    for (std::size_t i = 0; i < kInitialFields; ++i) {
        const Field& f = field(i);
        std::uint64_t acc = 0;
        for (const auto& [e, c] : terms) {
            const std::uint64_t er = e % b_;
            const std::uint64_t w = f.powers.empty() ? pow_mod(f.omega, er, f.q) : f.powers[er];
            acc += mul_mod(reduce_mod(c, f.q), w, f.q);
            if (acc >= f.q) acc -= f.q;
        }
        if (acc != 0) return false;
    }
    IntPolynomial folded;
    for (const auto& [e, c] : terms) folded.add_term(mpz_class(static_cast<long>(c)), e % b_);
    return settle_exactly(folded);
}

bool divides_cyclotomic(const IntPolynomial& p, std::uint64_t b) {
    CyclotomicDivisibility tester(b);
    return tester.divides(p);
}

bool rad_reduction_check(std::uint64_t n) {
    const std::uint64_t r = radical(n);
    return cyclotomic(n) == cyclotomic(r).scale_exponents(n / r);
}

std::vector<IntPolynomial> residue_split(const IntPolynomial& p, std::uint64_t beta) {
    if (beta == 0) throw std::invalid_argument("residue_split: beta must be positive");
    std::vector<IntPolynomial> parts(beta);
    for (const auto& [e, c] : p.terms()) parts[e % beta].add_term(c, e);
    return parts;
}

bool fs_hypothesis(std::uint64_t term_count, const std::vector<std::uint64_t>& primes) {
    std::set<std::uint64_t> seen;
    std::int64_t sum = 0;
    for (std::uint64_t p : primes) {
        if (!is_prime(p)) throw std::invalid_argument("fs_hypothesis: " + std::to_string(p) + " is not prime");
        if (!seen.insert(p).second) throw std::invalid_argument("fs_hypothesis: primes must be distinct");
        sum += static_cast<std::int64_t>(p) - 2;
    }
    return sum > static_cast<std::int64_t>(term_count) - 2;
}

std::uint64_t feasible_index_ceiling(const FeasibleIndexQuery& query) {
    if (query.rad_ratio_bound == 0) return 0;
    std::vector<std::uint64_t> primes(query.allowed_primes.begin(), query.allowed_primes.end());
    if (primes.size() > 24) throw std::invalid_argument("enumerate_feasible_indices: too many allowed primes");
    for (std::uint64_t p : primes)
        if (!is_prime(p)) throw std::invalid_argument("enumerate_feasible_indices: allowed set contains a non-prime");
    std::uint64_t best_rad = 1;
    const std::size_t subsets = std::size_t{1} << primes.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t sum = 0;
        std::uint64_t rad = 1;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            sum += primes[i] - 2;
            rad *= primes[i];
        }
        if (sum <= query.sum_bound) best_rad = std::max(best_rad, rad);
    }
    return best_rad * (query.rad_ratio_bound - 1);
}

std::vector<std::uint64_t> enumerate_feasible_indices(const FeasibleIndexQuery& query) {
    const std::uint64_t ceiling = feasible_index_ceiling(query);
    std::vector<std::uint64_t> out;
    if (ceiling == 0) return out;
    const std::set<std::uint64_t> allowed(query.allowed_primes.begin(), query.allowed_primes.end());

    // Smallest-prime-factor sieve over the whole ceiling.
    std::vector<std::uint32_t> spf(ceiling + 1, 0);
    for (std::uint64_t i = 2; i <= ceiling; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= ceiling; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }

    for (std::uint64_t b = std::max<std::uint64_t>(query.min_b, 1); b <= ceiling; ++b) {
        if (query.forbid_four && b % 4 == 0) continue;
        std::uint64_t rest = b;
        std::uint64_t rad = 1;
        std::uint64_t sum = 0;
        bool ok = true;
        while (rest > 1) {
            const std::uint64_t p = spf[rest];
            if (!allowed.count(p)) {
                ok = false;
                break;
            }
            rad *= p;
            sum += p - 2;
            while (rest % p == 0) rest /= p;
        }
        if (!ok || sum > query.sum_bound || b / rad >= query.rad_ratio_bound) continue;
        out.push_back(b);
    }
    return out;
}

}  // namespace nutforge
