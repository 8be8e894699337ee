"""Tests for monomial ideals: symbolic powers, polyhedra, and resurgence."""

import itertools
import random
from fractions import Fraction

import pytest

from symdual.errors import (
    CapExceeded,
    DimensionTooLarge,
    InvalidInput,
    NotSquarefree,
)
from symdual.monomial import (
    MonomialIdeal,
    beta_nu_report,
    beta_nu_window,
    corona_reg_value,
    corona_reg_window,
    corona_subadditivity,
    minimal_primes_squarefree,
    newton_closure_member,
    nu_eval,
    nu_symbolic_window,
    polyhedron_invariants,
    resurgence_windows,
    symbolic_polyhedron,
    symbolic_power,
)
from symdual.numseq import NEG_INF


def _triangle():
    return MonomialIdeal(2, [(1, 1, 0), (1, 0, 1), (0, 1, 1)])


def test_ideal_validation():
    pytest.raises(InvalidInput, lambda: MonomialIdeal(2, []))
    pytest.raises(InvalidInput, lambda: MonomialIdeal(2, [(1, 1)]))
    pytest.raises(InvalidInput, lambda: MonomialIdeal(1, [(1, -1)]))
    pytest.raises(InvalidInput, lambda: MonomialIdeal(1, [(0, 0)]))


def test_ideal_minimalization():
    I = MonomialIdeal(1, [(2, 0), (3, 0), (2, 0), (1, 2)])
    assert I.gens == ((2, 0), (1, 2))
    assert _triangle().is_squarefree()
    assert not I.is_squarefree()


def test_ideal_membership():
    T = _triangle()
    assert T.contains_monomial((1, 1, 0))
    assert T.contains_monomial((2, 1, 3))
    assert not T.contains_monomial((2, 0, 0))
    assert T.contains(MonomialIdeal(2, [(1, 1, 1)]))
    assert not MonomialIdeal(2, [(1, 1, 1)]).contains(T)


def test_ideal_operations():
    A = MonomialIdeal(1, [(2, 0)])
    B = MonomialIdeal(1, [(0, 3)])
    assert A.intersect(B).gens == ((2, 3),)
    assert A.multiply(B).gens == ((2, 3),)
    assert A.power(3).gens == ((6, 0),)
    C = MonomialIdeal(1, [(1, 0), (0, 1)])
    assert C.power(2).gens == ((0, 2), (1, 1), (2, 0))


def test_ideal_json_round_trip():
    T = _triangle()
    doc = T.to_json()
    assert doc == {"N": 2, "generators": [[0, 1, 1], [1, 0, 1], [1, 1, 0]]}
    assert MonomialIdeal.from_json(doc) == T


def test_minimal_primes():
    assert minimal_primes_squarefree(_triangle()) == [(0, 1), (0, 2), (1, 2)]
    path = MonomialIdeal(2, [(1, 1, 0), (0, 1, 1)])
    assert sorted(minimal_primes_squarefree(path)) == [(0, 2), (1,)]
    single = MonomialIdeal(2, [(1, 0, 0)])
    assert minimal_primes_squarefree(single) == [(0,)]
    pytest.raises(
        NotSquarefree,
        lambda: minimal_primes_squarefree(MonomialIdeal(1, [(2, 0)])),
    )


def test_symbolic_power_triangle():
    T = _triangle()
    assert symbolic_power(T, 1) == T
    S2 = symbolic_power(T, 2)
    assert S2.gens == ((1, 1, 1), (0, 2, 2), (2, 0, 2), (2, 2, 0))
    # the symbolic square strictly contains the ordinary square
    assert S2.contains(T.power(2))
    assert not T.power(2).contains(S2)


def test_symbolic_power_complete_intersections():
    # one edge: a complete intersection, symbolic powers are ordinary
    E = MonomialIdeal(1, [(1, 1)])
    for n in (1, 2, 3):
        assert symbolic_power(E, n) == E.power(n)
    P = MonomialIdeal(2, [(1, 0, 0)])
    assert symbolic_power(P, 3) == P.power(3)


def test_symbolic_power_product_containment():
    # I^(a) I^(b) is contained in I^(a+b)
    rng = random.Random(17)
    for _ in range(10):
        nvars = rng.randrange(2, 5)
        supports = [
            tuple(sorted(rng.sample(range(nvars), rng.randrange(1, nvars))))
            for _ in range(rng.randrange(1, 4))
        ]
        gens = [
            tuple(1 if i in s else 0 for i in range(nvars)) for s in supports
        ]
        I = MonomialIdeal(nvars - 1, gens)
        a, b = rng.randrange(1, 4), rng.randrange(1, 4)
        prod = symbolic_power(I, a).multiply(symbolic_power(I, b))
        assert symbolic_power(I, a + b).contains(prod)


def test_symbolic_power_caps():
    T = _triangle()
    pytest.raises(CapExceeded, lambda: symbolic_power(T, 9))
    K7 = MonomialIdeal(
        6,
        [
            tuple(1 if i in e else 0 for i in range(7))
            for e in itertools.combinations(range(7), 2)
        ],
    )
    pytest.raises(CapExceeded, lambda: symbolic_power(K7, 2))


def test_nu_eval():
    T = _triangle()
    assert nu_eval((1, 1, 1), T) == 2
    assert nu_eval((2, 1, 1), T) == 2
    assert nu_eval((1, 0, 0), T) == 0
    pytest.raises(InvalidInput, lambda: nu_eval((1, 1), T))
    pytest.raises(InvalidInput, lambda: nu_eval((0, 0, 0), T))
    pytest.raises(InvalidInput, lambda: nu_eval((1, -1, 1), T))


def test_nu_symbolic_window():
    T = _triangle()
    w = nu_symbolic_window(T, (1, 1, 1), 5)
    assert w.values == (2, 3, 5, 6, 8)
    assert w.certified_monotone
    # nu is subadditive in the symbolic index
    for a in range(1, 5):
        for b in range(1, 6 - a):
            assert w[a + b] <= w[a] + w[b]


def test_beta_nu_window():
    T = _triangle()
    win = beta_nu_window(T, (1, 1, 1), 4, d_cap=8)
    assert win.start == 1
    assert win.values == (NEG_INF, 2, 3, 4)
    # too small a degree cap cannot certify the sup
    pytest.raises(
        CapExceeded, lambda: beta_nu_window(T, (1, 1, 1), 3, d_cap=2)
    )
    pytest.raises(
        InvalidInput, lambda: beta_nu_window(T, (1, 0, 0), 3, d_cap=8)
    )


def test_beta_nu_report():
    rep = beta_nu_report(_triangle(), (1, 1, 1), 5, d_cap=8)
    assert rep["window"] == {"start": 1, "values": ["-inf", 2, 3, 4, 6]}
    assert rep["n1_empty"] is True
    assert rep["max_ratio"] == "6/5"
    assert rep["growth_bound"] == "4/3"
    assert rep["ratio_within_bound"] is True
    assert rep["superadditive_on_window"] is True


def test_newton_closure_membership():
    I = MonomialIdeal(1, [(2, 0), (0, 2)])
    assert newton_closure_member((1, 1), I)
    assert newton_closure_member((2, 0), I)
    assert not newton_closure_member((1, 0), I)
    T = _triangle()
    assert newton_closure_member((1, 1, 1), T)
    assert not newton_closure_member((1, 1, 1), T, n=2)
    assert newton_closure_member((2, 2, 2), T, n=2)
    pytest.raises(InvalidInput, lambda: newton_closure_member((1, 1), T))
    pytest.raises(InvalidInput, lambda: newton_closure_member((1, 1, 1), T, n=0))


def test_resurgence_windows_triangle():
    out = resurgence_windows(_triangle(), 4, d_cap=8)
    assert out["lambda"].values == (NEG_INF, 2, 3, 4)
    assert out["beta_ic"].values == (NEG_INF, 2, 3, 4)
    assert out["ratios"] == {
        "lambda_max_ratio": "1",
        "beta_ic_max_ratio": "1",
    }


def test_resurgence_windows_prime():
    # for a prime, symbolic equals ordinary, so noncontainment stops at n-1
    P = MonomialIdeal(1, [(1, 0)])
    out = resurgence_windows(P, 4, d_cap=8)
    assert out["lambda"].values == (NEG_INF, 1, 2, 3)
    pytest.raises(InvalidInput, lambda: resurgence_windows(P, 10, d_cap=4))
    pytest.raises(
        NotSquarefree,
        lambda: resurgence_windows(MonomialIdeal(1, [(2, 0)]), 3),
    )


def test_symbolic_polyhedron_triangle():
    poly = symbolic_polyhedron(_triangle())
    verts = {tuple(Fraction(c) for c in v) for v in poly.vertices}
    half = Fraction(1, 2)
    assert verts == {
        (1, 1, 0),
        (1, 0, 1),
        (0, 1, 1),
        (half, half, half),
    }


def test_symbolic_polyhedron_dimension_cap():
    big = MonomialIdeal(9, [tuple([1] * 10)])
    pytest.raises(DimensionTooLarge, lambda: symbolic_polyhedron(big))


def test_polyhedron_invariants():
    inv = polyhedron_invariants(_triangle())
    assert inv["waldschmidt"] == Fraction(3, 2)
    assert inv["areg"] == Fraction(2)
    assert inv["equal_sums"] is False
    assert inv["generator_vertex"] == [0, 1, 1]
    E = MonomialIdeal(1, [(1, 1)])
    inv = polyhedron_invariants(E)
    assert inv["waldschmidt"] == Fraction(2)
    assert inv["areg"] == Fraction(2)
    assert inv["equal_sums"] is True


def test_waldschmidt_bounds_initial_degrees():
    # min vertex sum is at most min gen degree of the n-th symbolic power
    # divided by n
    rng = random.Random(23)
    for _ in range(8):
        nvars = rng.randrange(2, 5)
        supports = {
            tuple(sorted(rng.sample(range(nvars), rng.randrange(1, nvars))))
            for _ in range(rng.randrange(1, 4))
        }
        gens = [
            tuple(1 if i in s else 0 for i in range(nvars)) for s in supports
        ]
        I = MonomialIdeal(nvars - 1, gens)
        wald = polyhedron_invariants(I)["waldschmidt"]
        for n in (1, 2, 3):
            alpha_n = min(sum(g) for g in symbolic_power(I, n).gens)
            assert wald <= Fraction(alpha_n, n)


def test_corona_values():
    assert corona_reg_value(3, 2, 2) == 9
    assert corona_reg_value(3, 2, 3) == 13
    assert corona_reg_window(3, 2, 6).values == (4, 9, 13, 18, 22, 27)
    pytest.raises(InvalidInput, lambda: corona_reg_value(1, 2, 1))
    pytest.raises(InvalidInput, lambda: corona_reg_value(3, 0, 1))
    pytest.raises(InvalidInput, lambda: corona_reg_value(3, 2, 0))


def test_corona_subadditivity_criterion():
    for m in range(2, 6):
        for s in range(1, 6):
            out = corona_subadditivity(m, s, t_max=10)
            assert out["subadditive"] == ((m - 2) * (s - 1) <= 0)
            assert out["predicted_nonsubadditive"] == ((m - 2) * (s - 1) > 0)
            if not out["subadditive"]:
                assert out["sub_violation"] is not None
