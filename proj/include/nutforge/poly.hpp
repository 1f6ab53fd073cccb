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
#include <initializer_list>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nutforge {

using Exponent = std::uint64_t;

// Degree of the zero polynomial. Compares below every real degree.
inline constexpr std::int64_t kZeroPolyDegree = std::numeric_limits<std::int64_t>::min();

/// Sparse polynomial over a coefficient ring (mpz_class or mpq_class).
/// Terms are kept in an exponent -> coefficient map with no stored zeros,
/// so structural equality is polynomial equality.
template <typename Coeff>
class SparsePolynomial {
public:
    using Terms = std::map<Exponent, Coeff>;

    SparsePolynomial() = default;

    explicit SparsePolynomial(Terms terms) : terms_(std::move(terms)) { prune(); }

    SparsePolynomial(std::initializer_list<std::pair<const Exponent, Coeff>> terms)
        : terms_(terms) {
        prune();
    }

    static SparsePolynomial constant(const Coeff& c) { return monomial(c, 0); }

    static SparsePolynomial monomial(const Coeff& c, Exponent e) {
        SparsePolynomial p;
        if (c != 0) p.terms_.emplace(e, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::int64_t degree() const {
        return terms_.empty() ? kZeroPolyDegree : static_cast<std::int64_t>(terms_.rbegin()->first);
    }

    Coeff coefficient(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    Coeff leading_coefficient() const { return terms_.empty() ? Coeff(0) : terms_.rbegin()->second; }

    void add_term(const Coeff& c, Exponent e) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(c, e);
        return *this;
    }

    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(Coeff(-c), e);
        return *this;
    }

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        SparsePolynomial out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(Coeff(ca * cb), ea + eb);
        return out;
    }

    SparsePolynomial operator-() const {
        SparsePolynomial out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }

    /// Multiplies every exponent by k, i.e. returns p(x^k).
    SparsePolynomial scale_exponents(Exponent k) const {
        Terms out;
        for (const auto& [e, c] : terms_) out.emplace(e * k, c);
        return SparsePolynomial(std::move(out));
    }

    Coeff evaluate(const Coeff& x) const {
        // Horner over the sparse gaps.
        Coeff acc = 0;
        Exponent prev = terms_.empty() ? 0 : terms_.rbegin()->first;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Exponent gap = prev - it->first;
            for (Exponent i = 0; i < gap; ++i) acc *= x;
            acc += it->second;
            prev = it->first;
        }
        for (Exponent i = 0; i < prev; ++i) acc *= x;
        return acc;
    }

    std::string to_string() const;

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    Terms terms_;
};

using IntPolynomial = SparsePolynomial<mpz_class>;
using RatPolynomial = SparsePolynomial<mpq_class>;

struct DivRem {
    RatPolynomial quotient;
    RatPolynomial remainder;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// Long division over the rationals: num = quotient * den + remainder with
/// deg remainder < deg den. Throws std::domain_error when den is zero.
DivRem poly_divrem(const IntPolynomial& num, const IntPolynomial& den);

/// Reduces p modulo x^m - 1 by folding every exponent e onto e mod m.
IntPolynomial poly_cyclic_reduce(const IntPolynomial& p, Exponent m);

RatPolynomial to_rational(const IntPolynomial& p);

/// Returns the integer polynomial when every coefficient of p is integral.
bool to_integer(const RatPolynomial& p, IntPolynomial& out);

/// Builds x^n - 1.
IntPolynomial x_pow_minus_one(Exponent n);

// Dense helpers: index i holds the coefficient of x^i.
std::vector<mpz_class> to_dense(const IntPolynomial& p);
IntPolynomial from_dense(const std::vector<mpz_class>& coeffs);

/// In-place division of a dense polynomial by a monic dense divisor. On return
/// `num` holds the remainder (resized to deg divisor) and the quotient is returned.
std::vector<mpz_class> dense_divide_monic(std::vector<mpz_class>& num, const std::vector<mpz_class>& monic);

}  // namespace nutforge
