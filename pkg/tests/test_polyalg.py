"""Tests for exact polynomial and divided power algebra."""

import random
from fractions import Fraction
from math import comb

import pytest

from symdual.errors import (
    CharMismatch,
    InvalidInput,
    NonHomogeneous,
    ZeroPoint,
)
from symdual.polyalg import (
    DividedPoly,
    GradedSubspace,
    Poly,
    canonical_point,
    contract,
    diff_apply,
    dim_graded,
    divided_mul,
    dual_power,
    monomial_basis,
    one_point_perp,
    parse_poly,
    point_ideal_generators,
    poly_from_json,
    poly_to_divided,
    poly_to_json,
)
from symdual.scalars import FieldScalar


def test_monomial_basis():
    assert monomial_basis(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(monomial_basis(3, 4)) == comb(4 + 2, 2)
    assert monomial_basis(3, 0) == ((0, 0, 0),)
    assert dim_graded(3, 4) == 15


def test_parse_poly():
    f = parse_poly("3*x0^2*x1 - x2^3", 3)
    assert str(f) == "3*x0^2*x1 - x2^3"
    assert f.homogeneous_degree() == 3
    g = parse_poly("Y0^[2]*Y1 + 2*Y2", 3, divided=True)
    assert str(g) == "Y0^[2]*Y1 + 2*Y2"
    assert parse_poly("0", 2) == Poly.zero(0, 2)
    pytest.raises(InvalidInput, lambda: parse_poly("", 2))
    pytest.raises(InvalidInput, lambda: parse_poly("x9", 2))


def test_poly_arithmetic():
    x0 = parse_poly("x0", 2)
    x1 = parse_poly("x1", 2)
    assert str((x0 + x1) * (x0 + x1)) == "x0^2 + 2*x0*x1 + x1^2"
    assert (x0 - x0) == Poly.zero(0, 2)
    assert not Poly.zero(0, 2)
    p2 = parse_poly("x0 + x1", 2, char=2)
    assert str(p2 * p2) == "x0^2 + x1^2"
    pytest.raises(CharMismatch, lambda: x0 + p2)


def test_poly_json_round_trip():
    f = parse_poly("3*x0^2*x1 - x2^3", 3)
    doc = poly_to_json(f)
    assert doc["divided"] is False and doc["nvars"] == 3
    assert poly_from_json(doc) == f


def test_homogeneous_degree_errors():
    f = parse_poly("x0^2 + x1", 2)
    pytest.raises(NonHomogeneous, f.homogeneous_degree)
    pytest.raises(NonHomogeneous, lambda: f.coefficient_vector(2))


def test_coefficient_vector():
    f = parse_poly("x0^2 + 4*x0*x1", 2)
    assert f.coefficient_vector(2) == [Fraction(1), Fraction(4), Fraction(0)]
    g = parse_poly("x0*x1", 2, char=3)
    assert g.coefficient_vector(2) == [0, 1, 0]


def test_divided_mul_structure():
    y0 = DividedPoly.monomial((1, 0), char=0)
    assert str(divided_mul(y0, y0)) == "2*Y0^[2]"
    y0p = DividedPoly.monomial((1, 0), char=2)
    assert not divided_mul(y0p, y0p)
    # Y^[a] Y^[b] = binom(a+b, a) Y^[a+b] in each variable
    ya = DividedPoly.monomial((2, 1), char=0)
    yb = DividedPoly.monomial((1, 1), char=0)
    assert str(divided_mul(ya, yb)) == "6*Y0^[3]*Y1^[2]"


def test_poly_to_divided():
    assert str(poly_to_divided(parse_poly("x0^2", 2))) == "2*Y0^[2]"


def test_contraction_action():
    # x^b acts on Y^[a] by lowering to Y^[a-b], zero when b does not divide
    f = parse_poly("x0*x1", 2)
    g = DividedPoly.monomial((2, 1), char=0)
    assert str(contract(f, g)) == "Y0"
    assert not contract(parse_poly("x1^2", 2), g)


def test_contraction_leibniz():
    # F . (Y_j g) = D_{e_j}(F) . g + Y_j (F . g), fixed small instance
    rng = random.Random(3)
    for _ in range(20):
        nvars, deg = 2, 3
        F = Poly.zero(0, nvars)
        g = DividedPoly.zero(0, nvars)
        for a in monomial_basis(nvars, deg):
            F = F + Poly.monomial(a, rng.randrange(-2, 3))
        for a in monomial_basis(nvars, deg):
            g = g + DividedPoly.monomial(a, rng.randrange(-2, 3))
        j = rng.randrange(nvars)
        yj = DividedPoly.monomial(tuple(int(i == j) for i in range(nvars)), char=0)
        lhs = contract(F, divided_mul(yj, g))
        e_j = tuple(int(i == j) for i in range(nvars))
        rhs = contract(diff_apply(e_j, F), g) + divided_mul(yj, contract(F, g))
        assert lhs == rhs


def test_diff_apply():
    F = parse_poly("x0^2 + x1*x2", 3)
    assert str(diff_apply((1, 0, 0), F)) == "2*x0"
    assert str(diff_apply((0, 1, 0), F)) == "x2"
    assert str(diff_apply((2, 0, 0), F)) == "1"
    # Hasse derivatives stay meaningful in characteristic p
    G = parse_poly("x0^2", 2, char=2)
    assert not diff_apply((1, 0), G)
    assert str(diff_apply((2, 0), G)) == "1"


def test_canonical_point():
    p = canonical_point((2, 4, 6))
    assert [c.value for c in p] == [Fraction(1), Fraction(2), Fraction(3)]
    assert canonical_point((0, 3, 6)) == canonical_point((0, 1, 2))
    assert canonical_point((2, 4, 6)) == canonical_point((1, 2, 3))
    pytest.raises(ZeroPoint, lambda: canonical_point((0, 0)))


def test_point_ideal_generators():
    gens = point_ideal_generators(canonical_point((1, 2, 3)))
    assert [str(g) for g in gens] == ["2*x0 - x1", "3*x0 - x2"]
    for g in gens:
        # generators vanish at the point
        val = FieldScalar.zero(0)
        for a, c in g.terms.items():
            term = c
            for i, e in enumerate(a):
                for _ in range(e):
                    term = term * canonical_point((1, 2, 3))[i]
            val = val + term
        assert not val


def test_dual_power():
    p = canonical_point((1, 2, 3))
    dp = dual_power(p, 2)
    assert str(dp) == (
        "Y0^[2] + 2*Y0*Y1 + 3*Y0*Y2 + 4*Y1^[2] + 6*Y1*Y2 + 9*Y2^[2]"
    )
    pytest.raises(InvalidInput, lambda: dual_power(p, -1))


def test_apolarity_pairing():
    # contracting a degree-d form against the d-th dual power of a point
    # evaluates the form at the point
    p = canonical_point((1, 2, 3))
    F = parse_poly("x0^2 + x1*x2", 3)
    res = contract(F, dual_power(p, 2))
    assert str(res) == "7"
    G = parse_poly("2*x0 - x1", 3)
    assert not contract(G, dual_power(p, 1))


def test_one_point_perp_dims():
    # the perp of the n-th power of a point ideal in degree d >= n has
    # dimension binom(n + N - 1, N)
    for N in (1, 2):
        p = canonical_point(tuple([1] + [0] * N))
        for n in range(1, 4):
            for d in range(n, n + 3):
                assert one_point_perp(p, n, d).dim == comb(n + N - 1, N)


def test_one_point_perp_annihilates():
    p = canonical_point((1, 2, 3))
    gens = point_ideal_generators(p)
    U = one_point_perp(p, 2, 3)
    # every product of two ideal generators times a linear form pairs to
    # zero with the perp space
    x_vars = [parse_poly(f"x{i}", 3) for i in range(3)]
    for g in gens:
        for h in gens:
            for x in x_vars:
                f = g * h * x
                vec = f.coefficient_vector(3)
                for row in U.rows:
                    s = sum(a * b for a, b in zip(vec, row))
                    assert s == 0


def test_graded_subspace_ops():
    polys = [parse_poly("x0^2", 2), parse_poly("x0*x1", 2)]
    U = GradedSubspace.from_polys(polys, 2)
    assert U.dim == 2
    V = GradedSubspace.from_polys([parse_poly("x0*x1 + x1^2", 2)], 2)
    assert U.add(V).dim == 3
    assert U.intersect(V).dim == 0
    W = GradedSubspace.from_polys([parse_poly("x0*x1", 2)], 2)
    assert U.intersect(U.add(W)).dim == 2
    assert U.perp().dim == 1
    assert U.perp().perp().rows == U.rows
    assert U.contains(parse_poly("x0^2 - 5*x0*x1", 2))
    assert not U.contains(parse_poly("x1^2", 2))


def test_graded_subspace_from_conditions():
    # kernel of one independent functional drops the dimension by one
    rows = [[Fraction(1), Fraction(0), Fraction(0)]]
    U = GradedSubspace.from_conditions(rows, 0, 2, 2)
    assert U.dim == 2
    assert not U.contains(parse_poly("x0^2", 2))
