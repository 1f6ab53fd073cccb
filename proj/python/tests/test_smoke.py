from fractions import Fraction

import networkx as nx
import pytest
import sympy

import nutforge


def to_nx(g6):
    return nx.from_graph6_bytes(g6.encode())


def sympy_nullity(g6):
    a = sympy.Matrix(nx.to_numpy_array(to_nx(g6), dtype=int).tolist())
    return a.shape[0] - a.rank()


def test_feasibility_matches_small_cases():
    assert nutforge.feasible_vt(8, 4)["exists"]
    assert not nutforge.feasible_vt(14, 6)["exists"]
    verdict = nutforge.feasible_vt(12, 6)
    assert verdict["exists"] and verdict["case"] == "d-2-mod-4"


def test_circulant_order_eight_is_nut():
    g6 = nutforge.circulant(8, {1, 2})
    g = to_nx(g6)
    assert g.number_of_nodes() == 8
    assert all(deg == 4 for _, deg in g.degree())
    cert = nutforge.nut_check_direct(g6)
    assert cert["is_nut"] and cert["nullity"] == 1
    assert sympy_nullity(g6) == 1
    x = cert["kernel_vector"]
    assert all(isinstance(v, Fraction) and v != 0 for v in x)
    for v in g.nodes:
        assert sum(x[u] for u in g.neighbors(v)) == 0


def test_construct_certifies():
    w = nutforge.construct(16, 6, jobs=1)
    g = to_nx(w["graph6"])
    assert g.number_of_nodes() == 16
    assert all(deg == 6 for _, deg in g.degree())
    assert w["certificate"]["is_nut"]
    assert sympy_nullity(w["graph6"]) == 1


def test_construct_rejects_infeasible_pair():
    with pytest.raises(ValueError):
        nutforge.construct(14, 6)


def test_spectral_agrees_with_direct():
    for rot, refl in [({1, 5}, {0}), ({1, 3, 5}, {0, 2, 3}), ({2, 4}, {1, 4})]:
        g6 = nutforge.dihedral(6, rot, refl)
        for shift in (0, 1):
            report = nutforge.nut_check_spectral(6, rot, refl, rot, shift)
            assert report["total_nullity"] == nutforge.nullity_shifted(g6, shift)


def test_cyclotomic_matches_sympy():
    x = sympy.Symbol("x")
    for n in (1, 2, 12, 30, 105):
        want = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert nutforge.cyclotomic(n) == [int(c) for c in want]
        assert len(nutforge.cyclotomic(n)) - 1 == nutforge.euler_phi(n)


def test_divides_cyclotomic_with_big_coefficients():
    big = 10**30
    phi3 = nutforge.cyclotomic(3)
    multiple = [big * c for c in phi3]
    assert nutforge.divides_cyclotomic(multiple, 3)
    assert not nutforge.divides_cyclotomic([1, 1], 3)


def test_isomorphism_and_complement():
    a = nutforge.dihedral(6, {1, 5}, {0})
    prism = nx.to_graph6_bytes(nx.circular_ladder_graph(6), header=False).decode().strip()
    assert nutforge.are_isomorphic(a, prism)
    assert nutforge.canonical_graph6(a) == nutforge.canonical_graph6(prism)
    assert nutforge.nut_check_direct(nutforge.complement(a))["is_nut"]


def test_family_suites():
    report = nutforge.verify_family_bounded("Q", 4, jobs=1)
    assert report["success"] and report["violations"] == []
    assert not nutforge.unique_remainder_holds("Q", 5, 0)
    low = nutforge.verify_unique_remainder("Q", 5, 5)
    assert not low["success"]
    assert nutforge.replicate_finite_case_analysis("Q")["success"]


def test_bad_graph6_raises():
    with pytest.raises(ValueError):
        nutforge.nut_check_direct("\x01bad")
