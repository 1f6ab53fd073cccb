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

#include "nutforge/nut.hpp"

#include <stdexcept>

#include "nutforge/cyclotomic.hpp"
#include "nutforge/numtheory.hpp"

namespace nutforge {

namespace {

IntPolynomial connection_polynomial(const std::set<int>& s, int m, bool inverse) {
    IntPolynomial p;
    for (int a : s) p.add_term(1, static_cast<Exponent>(inverse ? (m - a) % m : a));
    return p;
}

void check_shift(int shift) {
    if (shift != 0 && shift != 1) throw std::invalid_argument("spectral check: shift must be 0 or 1");
}

}  // namespace

std::string to_string(CertMethod m) {
    switch (m) {
        case CertMethod::direct: return "direct";
        case CertMethod::spectral: return "spectral";
        case CertMethod::both: return "both";
    }
    return "unknown";
}

NutCertificate nut_check_direct(const Graph& g) {
    NutCertificate cert;
    cert.method = CertMethod::direct;
    const KernelResult k = matrix_kernel(g.adjacency_matrix());
    cert.nullity = k.nullity;
    if (k.nullity == 1) {
        bool has_zero = false;
        for (const auto& x : k.basis[0])
            if (x == 0) has_zero = true;
        cert.kernel_vector = k.basis[0];
        cert.kernel_has_zero_entry = has_zero;
        cert.is_nut = !has_zero && g.order() >= 2;
    }
    return cert;
}

std::size_t nullity_shifted(const Graph& g, long shift) {
    return matrix_kernel(g.adjacency_matrix(shift)).nullity;
}

IntPolynomial det_polynomial(const BicirculantSpec& spec, int shift) {
    spec.validate();
    check_shift(shift);
    const int m = spec.m;
    const IntPolynomial s = IntPolynomial::constant(shift);
    const IntPolynomial p0 = connection_polynomial(spec.s0, m, false) + s;
    const IntPolynomial p2 = connection_polynomial(spec.s2, m, false) + s;
    const IntPolynomial p1 = connection_polynomial(spec.s1, m, false);
    const IntPolynomial p1_star = connection_polynomial(spec.s1, m, true);
    return poly_cyclic_reduce(poly_mul(p0, p2) - poly_mul(p1, p1_star), static_cast<Exponent>(m));
}

IntPolynomial trace_polynomial(const BicirculantSpec& spec, int shift) {
    spec.validate();
    check_shift(shift);
    const int m = spec.m;
    IntPolynomial tr = connection_polynomial(spec.s0, m, false) + connection_polynomial(spec.s2, m, false);
    tr.add_term(2 * shift, 0);
    return poly_cyclic_reduce(tr, static_cast<Exponent>(m));
}

std::vector<std::uint64_t> SpectralReport::singular_divisors() const {
    std::vector<std::uint64_t> out;
    for (const auto& v : divisor_verdicts)
        if (v.det_divisible) out.push_back(v.b);
    return out;
}

bool SpectralReport::nullity_one() const {
    if (total_nullity != 1) return false;
    const auto sing = singular_divisors();
    return sing.size() == 1 && sing[0] <= 2;
}

SpectralReport nut_check_spectral(const BicirculantSpec& spec, int shift) {
    const IntPolynomial det = det_polynomial(spec, shift);
    const IntPolynomial trace = trace_polynomial(spec, shift);
    SpectralReport report;
    report.m = spec.m;
    report.shift = shift;
    for (std::uint64_t b : divisors(static_cast<std::uint64_t>(spec.m))) {
        DivisorVerdict v;
        v.b = b;
        CyclotomicDivisibility tester(b);
        v.det_divisible = tester.divides(det);
        if (v.det_divisible) {
            const bool trace_vanishes = tester.divides(trace);
            v.trace_nonzero_at_root = !trace_vanishes;
            v.multiplicity = trace_vanishes ? 2 : 1;
            report.total_nullity += static_cast<std::size_t>(euler_phi(b)) * v.multiplicity;
        }
        report.divisor_verdicts.push_back(v);
    }
    return report;
}

std::size_t circulant_nullity(const CirculantSpec& spec, int shift) {
    spec.validate();
    const int n = spec.n;
    IntPolynomial p = connection_polynomial(symmetric_closure(spec.jumps, n), n, false);
    p.add_term(shift, 0);
    std::size_t nullity = 0;
    for (std::uint64_t b : divisors(static_cast<std::uint64_t>(n)))
        if (divides_cyclotomic(p, b)) nullity += static_cast<std::size_t>(euler_phi(b));
    return nullity;
}

}  // namespace nutforge
