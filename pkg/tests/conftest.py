import random
from fractions import Fraction

import pytest
import sympy

from inversys.poly import Poly, monomials


def random_form(rng, nvars, d, density=1.0, bound=5):
    """Random homogeneous form; never zero."""
    while True:
        terms = {}
        for e in monomials(nvars, d):
            if rng.random() < density:
                terms[e] = rng.randint(-bound, bound)
        p = Poly(nvars, terms)
        if p:
            return p


def random_poly(rng, nvars, max_deg=3, nterms=4, bound=5):
    terms = {}
    for _ in range(nterms):
        e = [0] * nvars
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(nvars)] += 1
        terms[tuple(e)] = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
    return Poly(nvars, terms)


def to_sympy(p, syms):
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, a in zip(syms, e):
            term *= s ** a
        expr += term
    return sympy.expand(expr)


def from_sympy(expr, syms):
    sp = sympy.Poly(sympy.expand(expr), *syms)
    return Poly(len(syms), {e: Fraction(int(c.p), int(c.q)) for e, c in sp.terms()})


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture
def syms():
    return sympy.symbols("y0:6")
