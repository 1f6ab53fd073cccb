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

#include "nutforge/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace nutforge {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalVector IntMatrix::apply(const RationalVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) acc += mpq_class((*this)(i, j)) * v[j];
        out[i] = acc;
    }
    return out;
}

KernelResult matrix_kernel(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix a = m;
    std::vector<std::size_t> pivot_cols;
    mpz_class prev_pivot = 1;
    mpz_class t1, t2;

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));

        const mpz_class pivot = a(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class lead = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                t1 = pivot * a(i, j);
                t2 = lead * a(r, j);
                t1 -= t2;
                // Sylvester's identity makes this division exact.
                if (!mpz_divisible_p(t1.get_mpz_t(), prev_pivot.get_mpz_t()))
                    throw std::logic_error("matrix_kernel: inexact Bareiss step");
                mpz_divexact(a(i, j).get_mpz_t(), t1.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev_pivot = pivot;
        pivot_cols.push_back(c);
        ++r;
    }

    KernelResult result;
    result.rank = pivot_cols.size();
    result.nullity = cols - result.rank;

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(cols, mpq_class(0));
        x[f] = 1;
        for (std::size_t k = pivot_cols.size(); k-- > 0;) {
            const std::size_t pc = pivot_cols[k];
            mpq_class acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (a(k, j) != 0 && x[j] != 0) acc += mpq_class(a(k, j)) * x[j];
            x[pc] = -acc / mpq_class(a(k, pc));
            x[pc].canonicalize();
        }
        result.basis.push_back(std::move(x));
    }
    return result;
}

}  // namespace nutforge
