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

#include "doctest.h"

#include <random>

#include "nutforge/cyclotomic.hpp"
#include "nutforge/graph_io.hpp"
#include "nutforge/nut.hpp"

using namespace nutforge;

TEST_CASE("direct certificates on small graphs") {
    const NutCertificate c8 = nut_check_direct(build_circulant({8, {1, 2}}));
    CHECK(c8.is_nut);
    CHECK(c8.nullity == 1);

    const NutCertificate p3 = nut_check_direct(path_graph(3));
    CHECK(p3.nullity == 1);
    REQUIRE(p3.kernel_vector.has_value());
    CHECK(*p3.kernel_vector == RationalVector{-1, 0, 1});
    CHECK(p3.kernel_has_zero_entry == true);
    CHECK(!p3.is_nut);

    const NutCertificate c4 = nut_check_direct(cycle_graph(4));
    CHECK(c4.nullity == 2);
    CHECK(!c4.kernel_vector.has_value());
    CHECK(!c4.is_nut);

    CHECK(!nut_check_direct(Graph(1)).is_nut);
}

TEST_CASE("shifted nullity") {
    // Prism eigenvalues are 2cos(2 pi k / 6) +- 1 for k < 6. The value -1 needs
    // 2cos = -2 (k = 3, sign +) or 2cos = 0 (never), so it is simple.
    const Graph prism = prism_graph(6);
    CHECK(nullity_shifted(prism, 1) == 1);
    CHECK(nut_check_direct(complement(prism)).nullity == 1);
    CHECK(nullity_shifted(Graph(5), 1) == 0);
    CHECK(nullity_shifted(cycle_graph(6), 0) == nut_check_direct(cycle_graph(6)).nullity);
}

TEST_CASE("determinant polynomial") {
    const BicirculantSpec prop = BicirculantSpec::from_dihedral({8, {1, 7}, {0, 1, 4, 6}});
    const IntPolynomial d = det_polynomial(prop, 0);
    CHECK(divides_cyclotomic(d, 2));
    for (std::uint64_t b : {1, 4, 8}) CHECK(!divides_cyclotomic(d, b));
    // At x = 1 this is det A_1 = (2)^2 - (4)^2.
    CHECK(d.evaluate(1) == 4 - 16);

    CHECK(det_polynomial(BicirculantSpec::from_dihedral({3, {}, {0}}), 0) == IntPolynomial{{0, -1}});
    const BicirculantSpec two_c4{4, {1, 3}, {}, {1, 3}};
    CHECK(det_polynomial(two_c4, 0) == IntPolynomial{{2, 2}, {0, 2}});
    CHECK_THROWS(det_polynomial(two_c4, 2));
}

TEST_CASE("spectral reports") {
    const SpectralReport r = nut_check_spectral(BicirculantSpec::from_dihedral({8, {1, 7}, {0, 1, 4, 6}}), 0);
    CHECK(r.singular_divisors() == std::vector<std::uint64_t>{2});
    CHECK(r.total_nullity == 1);
    CHECK(r.nullity_one());

    const SpectralReport c = nut_check_spectral(BicirculantSpec::from_dihedral({10, {2, 8}, {0, 8, 9}}), 1);
    CHECK(c.singular_divisors() == std::vector<std::uint64_t>{1});
    CHECK(c.nullity_one());

    const SpectralReport two_c4 = nut_check_spectral({4, {1, 3}, {}, {1, 3}}, 0);
    CHECK(two_c4.singular_divisors() == std::vector<std::uint64_t>{4});
    CHECK(two_c4.total_nullity == 4);
    CHECK(!two_c4.nullity_one());
}

TEST_CASE("spectral and direct nullity agree on random bicirculants") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        const int m = 3 + static_cast<int>(rng() % 8);
        BicirculantSpec spec{m, {}, {}, {}};
        for (int a = 1; 2 * a <= m; ++a) {
            if (rng() % 2) spec.s0.insert({a, m - a});
            if (rng() % 2) spec.s2.insert({a, m - a});
        }
        for (int b = 0; b < m; ++b)
            if (rng() % 2) spec.s1.insert(b);
        const Graph g = build_bicirculant(spec);
        CHECK(nut_check_spectral(spec, 0).total_nullity == nut_check_direct(g).nullity);
        CHECK(nut_check_spectral(spec, 1).total_nullity == nullity_shifted(g, 1));
    }
}

TEST_CASE("circulant nullity agrees with the direct kernel") {
    for (int n = 3; n <= 14; ++n)
        for (int mask = 0; mask < (1 << (n / 2)); ++mask) {
            CirculantSpec spec{n, {}};
            for (int j = 1; 2 * j <= n; ++j)
                if (mask >> (j - 1) & 1) spec.jumps.insert(j);
            const Graph g = build_circulant(spec);
            CHECK(circulant_nullity(spec, 0) == nut_check_direct(g).nullity);
            CHECK(circulant_nullity(spec, 1) == nullity_shifted(g, 1));
        }
}
