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

#include "nutforge/graph.hpp"
#include "nutforge/matrix.hpp"
#include "nutforge/poly.hpp"

namespace nutforge {

enum class CertMethod { direct, spectral, both };

std::string to_string(CertMethod m);

struct NutCertificate {
    bool is_nut = false;
    std::size_t nullity = 0;
    std::optional<RationalVector> kernel_vector;    // present iff nullity == 1 (direct)
    std::optional<bool> kernel_has_zero_entry;
    CertMethod method = CertMethod::direct;
};

/// Exact kernel of A(g). A nut graph has order at least 2, nullity 1 and a
/// kernel vector without zero entries.
NutCertificate nut_check_direct(const Graph& g);

/// Nullity of A(g) + shift * I.
std::size_t nullity_shifted(const Graph& g, long shift);

struct DivisorVerdict {
    std::uint64_t b = 0;
    bool det_divisible = false;
    std::optional<bool> trace_nonzero_at_root;  // decided only when det_divisible
    unsigned multiplicity = 0;                  // 0, 1 or 2 per primitive b-th root
};

struct SpectralReport {
    int m = 0;
    int shift = 0;
    std::vector<DivisorVerdict> divisor_verdicts;  // ascending b
    std::size_t total_nullity = 0;

    std::vector<std::uint64_t> singular_divisors() const;
    /// Nullity one with the single singular index real (b = 1 or 2) and simple.
    bool nullity_one() const;
};

/// D(x) = (shift + p0)(shift + p2) - p1 p1* reduced modulo x^m - 1. For every
/// m-th root of unity zeta, D(zeta) = det(A_zeta + shift I) where
/// A_zeta = [p0(zeta), p1(zeta^-1); p1(zeta), p2(zeta)].
IntPolynomial det_polynomial(const BicirculantSpec& spec, int shift);

/// p0 + p2 + 2 shift reduced modulo x^m - 1.
IntPolynomial trace_polynomial(const BicirculantSpec& spec, int shift);

/// Nullity of A + shift I through the block decomposition over the m-th roots
/// of unity. Each A_zeta is Hermitian, so it vanishes exactly when both its
/// determinant and trace vanish.
SpectralReport nut_check_spectral(const BicirculantSpec& spec, int shift);

/// Nullity of A + shift I for a circulant: sum of phi(b) over the b | n for
/// which Phi_b divides shift + sum over the connection set of x^j.
std::size_t circulant_nullity(const CirculantSpec& spec, int shift);

}  // namespace nutforge
