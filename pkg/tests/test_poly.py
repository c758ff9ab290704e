import random
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from inversys.errors import DimensionError, InputError, ParseError
from inversys.poly import (
    Poly, PolyMatrix, add, det, format_poly, jacobian, monomials, mul, parse,
    parse_many, partial, scale)

from conftest import random_poly, to_sympy


def P(text, n=None):
    return parse(text, n)


# -- arithmetic -------------------------------------------------------------

def test_additive_inverse():
    x0 = P("x0")
    assert add(x0, -x0).is_zero()


def test_difference_of_squares():
    assert mul(P("x0 + x1"), P("x0 - x1")) == P("x0^2 - x1^2")


def _expand_term_by_term(factors, n):
    # oracle: distribute a product of sums one term at a time
    acc = {(0,) * n: Fraction(1)}
    for f in factors:
        nxt = {}
        for e1, c1 in acc.items():
            for e2, c2 in f.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nxt[e] = nxt.get(e, 0) + c1 * c2
        acc = nxt
    return {e: c for e, c in acc.items() if c}


def test_legendre_product_lambda_2():
    y0, y1, y2 = (Poly.var(3, i) for i in range(3))
    lam = 2
    got = mul(y1 ** 2, y2) - mul(y0, mul(y0 - y2, y0 - lam * y2))
    prod = _expand_term_by_term(
        [{(1, 0, 0): 1}, {(1, 0, 0): 1, (0, 0, 1): -1}, {(1, 0, 0): 1, (0, 0, 1): -lam}], 3)
    expected = {(0, 2, 1): 1}
    for e, c in prod.items():
        expected[e] = expected.get(e, 0) - c
    assert got == Poly(3, expected)
    assert got == P("x1^2*x2 - x0^3 + 3*x0^2*x2 - 2*x0*x2^2")


def test_scale():
    assert scale(Fraction(1, 2), P("2*x0 + 4*x1")) == P("x0 + 2*x1")
    assert scale(0, P("x0")).is_zero()


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        add(P("x0"), P("x1"))
    with pytest.raises(DimensionError):
        mul(P("x0", 1), P("x0", 2))


# -- derivatives ------------------------------------------------------------

def test_partial_examples():
    assert partial(P("x0^3"), 0) == P("3*x0^2")
    assert partial(P("x0*x1*x2"), 1) == P("x0*x2")
    H2 = P("x1^2*x2 - x0^3 + 3*x0^2*x2 - 2*x0*x2^2")
    assert partial(H2, 2) == P("x1^2 + 3*x0^2 - 4*x0*x2")


def test_partial_out_of_range():
    with pytest.raises(InputError):
        partial(P("x0"), 1)


def test_partial_drops_degree():
    rng = random.Random(1)
    for _ in range(20):
        p = random_poly(rng, 3)
        for i in range(3):
            d = partial(p, i)
            if d and p.is_homogeneous():
                assert d.is_homogeneous() and d.degree == p.degree - 1


# -- jacobian and determinant ----------------------------------------------

def test_jacobian_diagonal():
    J = jacobian(parse_many(["x0^2", "x1^2", "x2^2"]))
    assert J == PolyMatrix([[P("2*x0", 3), P("0", 3), P("0", 3)],
                            [P("0", 3), P("2*x1", 3), P("0", 3)],
                            [P("0", 3), P("0", 3), P("2*x2", 3)]])


def test_jacobian_five_variables():
    f = parse_many(["x0^2", "x1^2", "x2^2", "x3^2", "x4^2 - 2*x0*x4"])
    J = jacobian(f)
    z = P("0", 5)
    rows = [[P("2*x0", 5), z, z, z, z], [z, P("2*x1", 5), z, z, z],
            [z, z, P("2*x2", 5), z, z], [z, z, z, P("2*x3", 5), z],
            [P("-2*x4", 5), z, z, z, P("2*x4 - 2*x0", 5)]]
    assert J == PolyMatrix(rows)


def test_jacobian_of_linear_forms_is_identity():
    for n in range(1, 5):
        J = jacobian([Poly.var(n, i) for i in range(n)])
        for i in range(n):
            for j in range(n):
                assert J[i, j] == (1 if i == j else 0)


def test_jacobian_arity():
    with pytest.raises(InputError):
        jacobian(parse_many(["x0^2", "x1^2"], 3))


def test_det_examples():
    assert det(jacobian(parse_many(["x0^2", "x1^2", "x2^2"]))) == P("8*x0*x1*x2")
    f = parse_many(["x0^2", "x1^2", "x2^2", "x3^2", "x4^2 - 2*x0*x4"])
    # 2^5 v w x y (z - v)
    assert det(jacobian(f)) == P("32*x0*x1*x2*x3*x4 - 32*x0^2*x1*x2*x3")
    a, b = P("x0 + x1"), P("x0*x1")
    assert det(PolyMatrix([[a, b], [a, b]])).is_zero()


def test_det_non_square():
    with pytest.raises(InputError):
        det(PolyMatrix([[P("x0"), P("x0")]]))


def _random_matrix(rng, k, n=2):
    return PolyMatrix([[random_poly(rng, n, max_deg=2, nterms=2) for _ in range(k)]
                       for _ in range(k)])


def test_det_against_sympy():
    rng = random.Random(2)
    syms = sympy.symbols("y0:2")
    for k in range(1, 5):
        M = _random_matrix(rng, k)
        ref = sympy.Matrix([[to_sympy(p, syms) for p in r] for r in M.rows]).det()
        assert sympy.expand(to_sympy(det(M), syms) - ref) == 0


def test_det_transpose_swap_block():
    rng = random.Random(3)
    for k in range(1, 5):
        M = _random_matrix(rng, k)
        assert det(M.transpose()) == det(M)
        if k > 1:
            rows = list(M.rows)
            rows[0], rows[1] = rows[1], rows[0]
            assert det(PolyMatrix(rows)) == -det(M)
    A, B = _random_matrix(rng, 2), _random_matrix(rng, 3)
    z = Poly.zero(2)
    block = [list(r) + [z] * 3 for r in A.rows] + [[z] * 2 + list(r) for r in B.rows]
    assert det(PolyMatrix(block)) == det(A) * det(B)


def test_jacobian_degree_law():
    rng = random.Random(4)
    from conftest import random_form
    for _ in range(10):
        ds = [rng.randint(1, 3) for _ in range(3)]
        f = [random_form(rng, 3, d) for d in ds]
        jd = det(jacobian(f))
        if jd:
            assert jd.is_homogeneous() and jd.degree == sum(ds) - 3


# -- monomials --------------------------------------------------------------

def test_monomials_counts():
    assert len(monomials(3, 2)) == 6
    assert monomials(3, 0) == ((0, 0, 0),)
    assert len(monomials(5, 2)) == 15


def test_monomials_order_and_completeness():
    import itertools
    for n in range(1, 5):
        for d in range(5):
            brute = [e for e in itertools.product(range(d + 1), repeat=n) if sum(e) == d]
            got = monomials(n, d)
            assert sorted(got) == sorted(brute)
            assert list(got) == sorted(brute, reverse=True)
            assert len(got) == comb(n - 1 + d, d)


# -- text format ------------------------------------------------------------

def test_parse_examples():
    p = P("3*x0^2*x1 - x2^3")
    assert p.terms == {(2, 1, 0): 3, (0, 0, 3): -1}
    assert format_poly(P("x1*x0")) == "x0*x1"
    assert format_poly(P("1/2*x0^2 + 1/2*x0^2")) == "x0^2"


def test_format_canonical():
    assert format_poly(P("3*x0^2*x1 - x2^3")) == "3*x0^2*x1 - x2^3"
    assert format_poly(P("-x2 + x0^2 - 1/3")) == "x0^2 - x2 - 1/3"
    assert format_poly(Poly.zero(2)) == "0"
    assert format_poly(P("x0*x1"), "y") == "y0*y1"


@pytest.mark.parametrize("bad, pos", [("x0 +", 4), ("3*", 2), ("x0^", 3), ("x", 1),
                                      ("2/0*x0", 2), ("x0 $ x1", 3), ("+x0", 0)])
def test_parse_errors(bad, pos):
    with pytest.raises(ParseError) as exc:
        parse(bad)
    assert exc.value.position == pos


def test_parse_index_out_of_range():
    with pytest.raises(ParseError) as exc:
        parse("x0 + x5", 3)
    assert exc.value.position == 5


REFERENCE_POLYS = [
    "x0*x1*x2*x3*x4 + x1*x2*x3*x4^2", "x0^2", "x1^2", "x4^2 - 2*x0*x4",
    "32*x0*x1*x2*x3*x4 - 32*x0^2*x1*x2*x3", "x0*x1*x2*x3*x4 + x3*x4^4",
    "x1^2*x2 - x0^3 + 3*x0^2*x2 - 2*x0*x2^2", "4*x0^2 + 6*x0*x2 + 3*x2^2",
    "x0^3 + 3*x1^2*x2", "x1^3 - x2^3", "x0^2 + x1^2 - 3*x0*x2",
    "25/9*x0^2 + 40/9*x0*x2 + 19/9*x2^2",
]


@pytest.mark.parametrize("text", REFERENCE_POLYS)
def test_round_trip_reference(text):
    p = parse(text)
    assert parse(format_poly(p), p.nvars) == p


# -- properties -------------------------------------------------------------

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exps = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda t: Poly(3, t))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.integers(0, 2))
def test_leibniz(p, q, i):
    assert partial(p * q, i) == partial(p, i) * q + p * partial(q, i)


@settings(max_examples=60, deadline=None)
@given(polys)
def test_round_trip_random(p):
    assert parse(format_poly(p), 3) == p
