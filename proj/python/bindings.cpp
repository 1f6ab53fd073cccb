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

// Python bindings. Graphs cross the boundary as graph6 strings and big
// integers as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nutforge/constructions.hpp"
#include "nutforge/cyclotomic.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/graph_io.hpp"
#include "nutforge/isomorphism.hpp"
#include "nutforge/lemmas.hpp"
#include "nutforge/nut.hpp"
#include "nutforge/numtheory.hpp"
#include "nutforge/parallel.hpp"

namespace py = pybind11;
using namespace nutforge;

namespace {

py::object to_pyint(const mpz_class& z) {
    const std::string s = z.get_str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_fraction(const mpq_class& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_pyint(q.get_num()), to_pyint(q.get_den()));
}

IntPolynomial from_coefficients(const std::vector<py::int_>& coeffs) {
    IntPolynomial p;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        const std::string digits = py::str(static_cast<py::handle>(coeffs[e]));
        p.add_term(mpz_class(digits), e);
    }
    return p;
}

py::list to_coefficients(const IntPolynomial& p) {
    py::list out;
    for (const mpz_class& c : to_dense(p)) out.append(to_pyint(c));
    return out;
}

py::dict certificate_dict(const NutCertificate& c) {
    py::dict d;
    d["is_nut"] = c.is_nut;
    d["nullity"] = c.nullity;
    d["method"] = to_string(c.method);
    if (c.kernel_vector) {
        py::list v;
        for (const mpq_class& x : *c.kernel_vector) v.append(to_fraction(x));
        d["kernel_vector"] = v;
    } else {
        d["kernel_vector"] = py::none();
    }
    return d;
}

py::dict witness_dict(const Witness& w) {
    py::dict d;
    d["graph6"] = to_graph6(w.graph);
    d["recipe"] = w.recipe;
    d["certificate"] = certificate_dict(w.certificate);
    return d;
}

py::object parse_report(const VerificationReport& r) {
    return py::module_::import("json").attr("loads")(r.summary_json());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact tools for vertex-transitive nut graphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InfeasiblePair>(m, "InfeasiblePair", PyExc_ValueError);
    py::register_exception<SearchExhausted>(m, "SearchExhausted", PyExc_RuntimeError);
    py::register_exception<SearchBudgetExceeded>(m, "SearchBudgetExceeded", PyExc_RuntimeError);

    m.def("feasible_vt", [](long n, long d) {
        const FeasibilityVerdict v = feasible_vt(n, d);
        py::dict out;
        out["exists"] = v.exists;
        out["case"] = to_string(v.case_);
        out["reason"] = v.reason;
        return out;
    }, py::arg("n"), py::arg("d"));

    m.def("construct", [](int n, int d, std::optional<unsigned> jobs) {
        SearchOptions opts;
        opts.jobs = resolve_jobs(jobs);
        Witness w;
        {
            py::gil_scoped_release release;
            w = construct(n, d, opts);
        }
        return witness_dict(w);
    }, py::arg("n"), py::arg("d"), py::arg("jobs") = py::none());

    m.def("circulant", [](int n, const std::set<int>& jumps) { return to_graph6(build_circulant({n, jumps})); },
          py::arg("n"), py::arg("jumps"));
    m.def("dihedral", [](int order_m, const std::set<int>& rotations, const std::set<int>& reflections) {
        return to_graph6(build_dihedral({order_m, rotations, reflections}));
    }, py::arg("m"), py::arg("rotations"), py::arg("reflections"));
    m.def("bicirculant", [](int order_m, const std::set<int>& s0, const std::set<int>& s1, const std::set<int>& s2) {
        return to_graph6(build_bicirculant({order_m, s0, s1, s2}));
    }, py::arg("m"), py::arg("s0"), py::arg("s1"), py::arg("s2"));
    m.def("complement", [](const std::string& g6) { return to_graph6(complement(from_graph6(g6))); }, py::arg("graph6"));

    m.def("nut_check_direct", [](const std::string& g6) { return certificate_dict(nut_check_direct(from_graph6(g6))); },
          py::arg("graph6"));
    m.def("nullity_shifted", [](const std::string& g6, long shift) { return nullity_shifted(from_graph6(g6), shift); },
          py::arg("graph6"), py::arg("shift") = 0);
    m.def("nut_check_spectral", [](int order_m, const std::set<int>& s0, const std::set<int>& s1,
                                   const std::set<int>& s2, int shift) {
        const SpectralReport r = nut_check_spectral({order_m, s0, s1, s2}, shift);
        py::dict out;
        out["total_nullity"] = r.total_nullity;
        out["singular_divisors"] = r.singular_divisors();
        out["nullity_one"] = r.nullity_one();
        return out;
    }, py::arg("m"), py::arg("s0"), py::arg("s1"), py::arg("s2"), py::arg("shift") = 0);

    m.def("canonical_graph6", [](const std::string& g6) { return canonical_form(from_graph6(g6)).graph6; },
          py::arg("graph6"));
    m.def("are_isomorphic", [](const std::string& a, const std::string& b) {
        return are_isomorphic(from_graph6(a), from_graph6(b));
    }, py::arg("a"), py::arg("b"));

    m.def("cyclotomic", [](std::uint64_t n) { return to_coefficients(cyclotomic(n)); }, py::arg("n"),
          "Dense coefficients of the n-th cyclotomic polynomial, constant term first.");
    m.def("divides_cyclotomic", [](const std::vector<py::int_>& coeffs, std::uint64_t b) {
        return divides_cyclotomic(from_coefficients(coeffs), b);
    }, py::arg("coefficients"), py::arg("b"));
    m.def("euler_phi", &euler_phi, py::arg("n"));

    m.def("family_polynomial", [](const std::string& name, std::uint64_t t) {
        return to_coefficients(build_family(FamilyId::parse(name), t));
    }, py::arg("family"), py::arg("t"));
    m.def("verify_family_bounded", [](const std::string& name, std::uint64_t t_max, std::optional<unsigned> jobs) {
        VerificationReport r;
        {
            py::gil_scoped_release release;
            r = verify_family_bounded(FamilyId::parse(name), t_max, std::nullopt, resolve_jobs(jobs));
        }
        return parse_report(r);
    }, py::arg("family"), py::arg("t_max"), py::arg("jobs") = py::none());
    m.def("verify_unique_remainder", [](const std::string& name, std::uint64_t lo, std::uint64_t hi,
                                        std::optional<unsigned> jobs) {
        VerificationReport r;
        {
            py::gil_scoped_release release;
            r = verify_unique_remainder(FamilyId::parse(name), lo, hi, resolve_jobs(jobs));
        }
        return parse_report(r);
    }, py::arg("family"), py::arg("beta_lo"), py::arg("beta_hi"), py::arg("jobs") = py::none());
    m.def("unique_remainder_holds", [](const std::string& name, std::uint64_t beta, std::uint64_t t) {
        return unique_remainder_holds(FamilyId::parse(name).tag, beta, t);
    }, py::arg("family"), py::arg("beta"), py::arg("t"));
    m.def("replicate_finite_case_analysis", [](const std::string& name, std::optional<unsigned> jobs) {
        VerificationReport r;
        {
            py::gil_scoped_release release;
            r = replicate_finite_case_analysis(FamilyId::parse(name), resolve_jobs(jobs));
        }
        return parse_report(r);
    }, py::arg("family"), py::arg("jobs") = py::none());
}
