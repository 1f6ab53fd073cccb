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

#include "nutforge/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace nutforge {

template <typename Coeff>
std::string SparsePolynomial<Coeff>::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "x";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

template class SparsePolynomial<mpz_class>;
template class SparsePolynomial<mpq_class>;

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

RatPolynomial to_rational(const IntPolynomial& p) {
    RatPolynomial::Terms terms;
    for (const auto& [e, c] : p.terms()) terms.emplace(e, mpq_class(c));
    return RatPolynomial(std::move(terms));
}

bool to_integer(const RatPolynomial& p, IntPolynomial& out) {
    IntPolynomial::Terms terms;
    for (const auto& [e, c] : p.terms()) {
        if (c.get_den() != 1) return false;
        terms.emplace(e, c.get_num());
    }
    out = IntPolynomial(std::move(terms));
    return true;
}

DivRem poly_divrem(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("poly_divrem: division by the zero polynomial");
    RatPolynomial rem = to_rational(num);
    RatPolynomial quo;
    const Exponent dd = static_cast<Exponent>(den.degree());
    const mpq_class lead(den.leading_coefficient());
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        const Exponent shift = static_cast<Exponent>(rem.degree()) - dd;
        mpq_class factor = rem.leading_coefficient() / lead;
        factor.canonicalize();
        quo.add_term(factor, shift);
        for (const auto& [e, c] : den.terms()) rem.add_term(mpq_class(-factor * c), e + shift);
    }
    return {std::move(quo), std::move(rem)};
}

IntPolynomial poly_cyclic_reduce(const IntPolynomial& p, Exponent m) {
    if (m == 0) throw std::invalid_argument("poly_cyclic_reduce: modulus must be positive");
    IntPolynomial out;
    for (const auto& [e, c] : p.terms()) out.add_term(c, e % m);
    return out;
}

IntPolynomial x_pow_minus_one(Exponent n) {
    IntPolynomial p;
    p.add_term(mpz_class(1), n);
    p.add_term(mpz_class(-1), 0);
    return p;
}

std::vector<mpz_class> to_dense(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    std::vector<mpz_class> out(static_cast<std::size_t>(p.degree()) + 1);
    for (const auto& [e, c] : p.terms()) out[e] = c;
    return out;
}

IntPolynomial from_dense(const std::vector<mpz_class>& coeffs) {
    IntPolynomial::Terms terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) terms.emplace(i, coeffs[i]);
    return IntPolynomial(std::move(terms));
}

std::vector<mpz_class> dense_divide_monic(std::vector<mpz_class>& num, const std::vector<mpz_class>& monic) {
    if (monic.empty() || monic.back() != 1) throw std::invalid_argument("dense_divide_monic: divisor must be monic");
    const std::size_t dd = monic.size() - 1;
    if (num.size() <= dd) {
        num.resize(dd);
        return {};
    }
    std::vector<mpz_class> quo(num.size() - dd);
    mpz_class tmp;
    for (std::size_t k = num.size(); k-- > dd;) {
        const mpz_class q = num[k];
        quo[k - dd] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            if (monic[j] == 0) continue;
            tmp = q * monic[j];
            num[k - dd + j] -= tmp;
        }
    }
    num.resize(dd);
    return quo;
}

}  // namespace nutforge
