"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` lives in ``Q[x0, ..., x_{n-1}]`` for a fixed variable count ``n``
and stores only its nonzero terms as ``{exponent tuple: Fraction}``.  The same
class is used for forms of the operator ring ``S`` and for forms of the dual
ring on which ``S`` acts by differentiation; which ring a value belongs to is
decided by where it is passed, and only the printed variable letter differs.

Terms are ordered by descending graded lexicographic order (total degree first,
then exponents compared left to right, ``x0`` heaviest).  That order fixes
the printed form and the pivot order of every echelon basis in the package.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational
from types import MappingProxyType

from inversys.errors import DimensionError, InputError, ParseError

__all__ = [
    "Poly",
    "PolyMatrix",
    "add",
    "mul",
    "scale",
    "partial",
    "jacobian",
    "det",
    "monomials",
    "monomial_index",
    "mono_key",
    "parse",
    "parse_many",
    "format_poly",
    "to_fraction",
]


def to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


def mono_key(exps):
    """Sort key putting monomials in canonical (descending graded lex) order."""
    return (-sum(exps), tuple(-a for a in exps))


@lru_cache(maxsize=None)
def monomials(nvars: int, d: int) -> tuple:
    """All exponent tuples of total degree ``d`` in canonical order."""
    if d < 0:
        raise InputError(f"degree must be non-negative, got {d}")
    if nvars == 0:
        return ((),) if d == 0 else ()
    if nvars == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - a):
            out.append((a,) + rest)
    assert len(out) == comb(nvars - 1 + d, d)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> dict:
    """Map exponent tuple -> position in ``monomials(nvars, d)``."""
    return {e: i for i, e in enumerate(monomials(nvars, d))}


class Poly:
    """Immutable sparse polynomial over Q."""

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        if nvars < 0:
            raise InputError("variable count must be non-negative")
        clean = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for e, c in items:
                e = tuple(int(a) for a in e)
                if len(e) != nvars:
                    raise DimensionError(
                        f"exponent tuple {e} does not have length {nvars}")
                if any(a < 0 for a in e):
                    raise InputError(f"negative exponent in {e}")
                c = to_fraction(c)
                if c:
                    c = clean.get(e, 0) + c
                    if c:
                        clean[e] = c
                    else:
                        clean.pop(e, None)
        self._nvars = nvars
        self._terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        if not 0 <= i < nvars:
            raise InputError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps, c=1):
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    @classmethod
    def _raw(cls, nvars, terms):
        # Trusted fast path: terms already normalized.
        p = cls.__new__(cls)
        p._nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # -- inspection --------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda t: mono_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, exps) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    @property
    def degree(self) -> int:
        if not self._terms:
            raise InputError("the zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        """True for nonzero polynomials whose terms all share one degree."""
        if not self._terms:
            return False
        return len({sum(e) for e in self._terms}) == 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise InputError(f"{self} is not a constant")
        return self._terms.get((0,) * self._nvars, Fraction(0))

    def support(self) -> set:
        """Indices of variables that occur in some term."""
        return {i for e in self._terms for i, a in enumerate(e) if a}

    def with_nvars(self, k: int) -> "Poly":
        """Re-embed in ``k`` variables; shrinking is allowed only for unused ones."""
        if k == self._nvars:
            return self
        if k > self._nvars:
            pad = (0,) * (k - self._nvars)
            return Poly._raw(k, {e + pad: c for e, c in self._terms.items()})
        if any(i >= k for i in self.support()):
            raise DimensionError(f"{self} uses variables beyond x{k - 1}")
        return Poly._raw(k, {e[:k]: c for e, c in self._terms.items()})

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if other._nvars != self._nvars:
            raise DimensionError(
                f"variable count mismatch: {self._nvars} vs {other._nvars}")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return Poly.const(self._nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return Poly._raw(self._nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return scale(other, self)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(self._nvars, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative powers are not polynomials")
        out = Poly.const(self._nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_monomial(self, exps) -> "Poly":
        exps = tuple(exps)
        return Poly._raw(self._nvars, {
            tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()})

    def partial(self, i: int) -> "Poly":
        return partial(self, i)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * self._nvars: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, nvars={self._nvars})"


def add(p: Poly, q: Poly) -> Poly:
    if not isinstance(q, Poly):
        raise TypeError("add expects two polynomials")
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    if not isinstance(q, Poly):
        raise TypeError("mul expects two polynomials")
    return p * q


def scale(c, p: Poly) -> Poly:
    c = to_fraction(c)
    if not c:
        return Poly.zero(p.nvars)
    return Poly._raw(p.nvars, {e: c * v for e, v in p._terms.items()})


def partial(p: Poly, i: int) -> Poly:
    """Formal partial derivative with respect to variable ``i``."""
    if not 0 <= i < p.nvars:
        raise InputError(f"variable index {i} out of range for {p.nvars} variables")
    out = {}
    for e, c in p._terms.items():
        a = e[i]
        if a:
            e2 = e[:i] + (a - 1,) + e[i + 1:]
            out[e2] = c * a
    return Poly._raw(p.nvars, out)


class PolyMatrix:
    """Rectangular grid of polynomials sharing one variable count."""

    __slots__ = ("rows", "nvars")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise InputError("matrix rows have different lengths")
        counts = {p.nvars for r in rows for p in r}
        if len(counts) > 1:
            raise DimensionError("matrix entries have different variable counts")
        self.rows = rows
        self.nvars = counts.pop() if counts else 0

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(zip(*self.rows))

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __repr__(self):
        body = "; ".join(", ".join(str(p) for p in r) for r in self.rows)
        return f"PolyMatrix([{body}])"


def jacobian(forms) -> PolyMatrix:
    """Entry ``(i, j)`` is the derivative of ``forms[i]`` by ``x_j``."""
    forms = list(forms)
    if not forms:
        raise InputError("jacobian needs at least one form")
    n = forms[0].nvars
    if len(forms) != n:
        raise InputError(
            f"jacobian needs exactly {n} forms in {n} variables, got {len(forms)}")
    return PolyMatrix([[partial(f, j) for j in range(n)] for f in forms])


def det(m: PolyMatrix) -> Poly:
    """Exact determinant by cofactor expansion memoized on column subsets."""
    rows, cols = m.shape
    if rows != cols:
        raise InputError(f"determinant of a non-square {rows}x{cols} matrix")
    n = rows
    if n == 0:
        return Poly.const(0, 1)
    memo = {}

    def minor(mask):
        # Rows popcount(mask).. n-1 against the columns in ``mask``.
        if mask == 0:
            return Poly.const(m.nvars, 1)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        r = n - bin(mask).count("1")
        total = Poly.zero(m.nvars)
        sign = 1
        for j in range(n):
            bit = 1 << j
            if mask & bit:
                entry = m.rows[r][j]
                if entry:
                    term = entry * minor(mask ^ bit)
                    total = total + term if sign > 0 else total - term
                sign = -sign
        memo[mask] = total
        return total

    return minor((1 << n) - 1)


# -- text format ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\^)|(\*)|(/)|(\+)|(-)|(\S))")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        kind = m.lastindex
        start = m.start(kind)
        if kind == 8:
            raise ParseError(f"unexpected character {m.group(8)!r}", text, start)
        toks.append(("int x ^ * / + -".split()[kind - 1], m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.positions = {}

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind):
        tok = self.toks[self.i]
        if tok[0] != kind:
            shown = tok[1] or "end of input"
            raise ParseError(f"expected {kind!r}, found {shown!r}", self.text, tok[2])
        self.i += 1
        return tok

    def poly(self):
        terms = []
        sign = 1
        if self.peek() == "-":
            self.take("-")
            sign = -1
        terms.append(self.term(sign))
        while self.peek() in ("+", "-"):
            sign = 1 if self.take(self.peek())[0] == "+" else -1
            terms.append(self.term(sign))
        self.take("end")
        return terms

    def term(self, sign):
        coeff = Fraction(1)
        if self.peek() == "int":
            num = int(self.take("int")[1])
            if self.peek() == "/":
                self.take("/")
                tok = self.take("int")
                den = int(tok[1])
                if den == 0:
                    raise ParseError("zero denominator", self.text, tok[2])
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            if self.peek() != "*":
                return sign * coeff, {}
            self.take("*")
        return sign * coeff, self.mono()

    def mono(self):
        exps = {}
        self.factor(exps)
        while self.peek() == "*":
            self.take("*")
            self.factor(exps)
        return exps

    def factor(self, exps):
        start = self.take("x")[2]
        idx = int(self.take("int")[1])
        power = 1
        if self.peek() == "^":
            self.take("^")
            power = int(self.take("int")[1])
        exps[idx] = exps.get(idx, 0) + power
        self.positions.setdefault(idx, start)


def parse(text: str, nvars: int | None = None) -> Poly:
    """Parse polynomial text such as ``"3*x0^2*x1 - 1/2*x2^3"``.

    ``nvars`` defaults to one more than the largest variable index present.
    """
    p = _Parser(text)
    raw = p.poly()
    top = max((k for _, e in raw for k in e), default=-1)
    if nvars is None:
        nvars = top + 1
    elif top >= nvars:
        raise ParseError(
            f"variable x{top} out of range for {nvars} variables", text,
            p.positions.get(top))
    terms = {}
    for c, e in raw:
        key = tuple(e.get(i, 0) for i in range(nvars))
        terms[key] = terms.get(key, 0) + c
    return Poly(nvars, terms)


def parse_many(texts, nvars: int | None = None) -> list:
    """Parse several polynomials into one common ring."""
    polys = [parse(t, nvars) for t in texts]
    if nvars is None:
        k = max((q.nvars for q in polys), default=0)
        polys = [q.with_nvars(k) for q in polys]
    return polys


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly, var: str = "x") -> str:
    """Canonical text: descending graded lex, explicit ``*`` and ``^``."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.items():
        factors = [f"{var}{i}" + (f"^{a}" if a > 1 else "")
                   for i, a in enumerate(e) if a]
        mag = abs(c)
        if not factors:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _fmt_coeff(mag) + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
