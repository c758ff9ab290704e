"""Contraction action, annihilators and inverse systems.

The operator ring ``S`` acts on the dual ring by letting ``x_i`` act as the
partial derivative in the i-th dual variable.  For a nonzero form ``H`` of
degree ``s`` the annihilator ``Ann(H) = {f : f o H = 0}`` is a Gorenstein
ideal whose quotient has Hilbert function ``d -> rank of the catalecticant``.
Everything here is graded linear algebra over Q, degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from inversys.errors import DimensionError, InputError
from inversys.graded import GradedBasis, to_vector
from inversys.linalg import Echelon, nullspace
from inversys.poly import Poly, format_poly, monomial_index, monomials
from inversys.regseq import _ideal_echelon, ideal_piece


def _falling(b, a):
    out = 1
    for k in range(b - a + 1, b + 1):
        out *= k
    return out


def contract(f: Poly, G: Poly) -> Poly:
    """``f o G``: apply ``f`` with each variable read as a partial derivative."""
    if f.nvars != G.nvars:
        raise DimensionError(f"variable count mismatch: {f.nvars} vs {G.nvars}")
    out = {}
    for a, c in f.terms.items():
        for b, g in G.terms.items():
            if any(ai > bi for ai, bi in zip(a, b)):
                continue
            w = 1
            for ai, bi in zip(a, b):
                if ai:
                    w *= _falling(bi, ai)
            e = tuple(bi - ai for ai, bi in zip(a, b))
            v = out.get(e, 0) + c * g * w
            if v:
                out[e] = v
            else:
                del out[e]
    return Poly._raw(f.nvars, out)


def _require_form(H: Poly) -> int:
    if H.is_zero():
        raise InputError("H must be nonzero")
    if not H.is_homogeneous():
        raise InputError(f"H = {H} is not homogeneous")
    return H.degree


def cat_matrix(H: Poly, d: int) -> list:
    """Catalecticant: rows S_d monomials, columns dual monomials of degree s-d."""
    s = _require_form(H)
    if not 0 <= d <= s:
        raise InputError(f"degree {d} outside 0..{s}")
    n = H.nvars
    cols = monomial_index(n, s - d)
    rows = []
    for m in monomials(n, d):
        row = [Fraction(0)] * len(cols)
        for e, c in contract(Poly._raw(n, {m: Fraction(1)}), H).terms.items():
            row[cols[e]] = c
        rows.append(row)
    return rows


def ann_piece(H: Poly, d: int) -> GradedBasis:
    """Degree-``d`` slice of ``Ann(H)``; all of S_d once ``d > deg H``."""
    s = _require_form(H)
    n = H.nvars
    if d > s:
        return GradedBasis.full(n, d)
    mat = cat_matrix(H, d)
    # left kernel: combinations of the rows that vanish
    transpose = [list(col) for col in zip(*mat)] if mat and mat[0] else []
    kernel = nullspace(transpose, len(mat))
    mons = monomials(n, d)
    return GradedBasis(n, d, tuple(
        Poly._raw(n, {mons[j]: c for j, c in v.items()}) for v in kernel))


@dataclass(frozen=True)
class HilbertFunction:
    values: tuple
    socle_degree: int

    def __getitem__(self, d):
        return self.values[d]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    @property
    def length(self) -> int:
        """Total dimension of the quotient algebra."""
        return sum(self.values)

    def __str__(self):
        return ",".join(str(v) for v in self.values)


def hilbert_function(H: Poly) -> HilbertFunction:
    s = _require_form(H)
    vals = tuple(Echelon(_rows_sparse(cat_matrix(H, d))).rank for d in range(s + 1))
    return HilbertFunction(vals, s)


def _rows_sparse(mat):
    return [{j: a for j, a in enumerate(r) if a} for r in mat]


def derived_piece(H: Poly, d: int) -> GradedBasis:
    """Degree-``d`` slice of the submodule generated by H and its derivatives."""
    s = _require_form(H)
    if not 0 <= d <= s:
        raise InputError(f"degree {d} outside 0..{s}")
    n = H.nvars
    derivs = (contract(Poly._raw(n, {m: Fraction(1)}), H) for m in monomials(n, s - d))
    return GradedBasis.span((g for g in derivs if g), n, d)


@dataclass(frozen=True)
class MinimalGenerators:
    """Minimal homogeneous generators as ``(degree, form)`` pairs, by degree."""

    generators: tuple

    @property
    def polys(self) -> tuple:
        return tuple(g for _, g in self.generators)

    @property
    def degrees(self) -> tuple:
        return tuple(d for d, _ in self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.polys)

    def strings(self, var: str = "x") -> list:
        return [format_poly(g, var) for g in self.polys]


def minimal_generators(H: Poly) -> MinimalGenerators:
    """Minimal generators of ``Ann(H)``, degree by degree up to ``deg H + 1``.

    In degree ``d`` the new generators span the canonical complement of
    ``S_1 * Ann(H)_{d-1}`` inside ``Ann(H)_d``: they are reduced against the
    product slice and then brought to reduced echelon form among themselves.
    """
    s = _require_form(H)
    n = H.nvars
    gens = []
    prev = GradedBasis(n, 0, ())
    for d in range(1, s + 2):
        ann = ann_piece(H, d)
        products = Echelon()
        for p in prev:
            for i in range(n):
                e = [0] * n
                e[i] = 1
                products.add(to_vector(p.mul_monomial(e), d))
        if products.rank < ann.dim:
            fresh = Echelon()
            for p in ann:
                r = products.reduce(to_vector(p, d))
                if r:
                    fresh.add(r)
            for row in fresh.rref():
                gens.append((d, _vec_to_poly(row, n, d)))
        prev = ann
    return MinimalGenerators(tuple(gens))


def _vec_to_poly(v, n, d):
    mons = monomials(n, d)
    return Poly._raw(n, {mons[j]: c for j, c in v.items()})


def inverse_system_top(gens, s: int, nvars: int | None = None) -> GradedBasis:
    """Degree-``s`` forms annihilated by every element of ``(gens)`` of degree <= s.

    It is enough to test the degree-``s`` slice of the ideal: a form of lower
    degree kills G exactly when all its degree-``s`` multiples do.
    """
    gens = list(gens)
    if nvars is None:
        if not gens:
            raise InputError("nvars is required for an empty generator list")
        nvars = gens[0].nvars
    if s < 0:
        raise InputError("degree must be non-negative")
    piece = ideal_piece(gens, s, nvars)
    mons = monomials(nvars, s)
    weights = [_monomial_factorial(e) for e in mons]
    # pairing of x^a with y^b in equal degree is a! when a == b
    rows = [{j: c * weights[j] for j, c in to_vector(f, s).items()} for f in piece]
    kernel = nullspace(rows, len(mons))
    return GradedBasis(nvars, s, tuple(_vec_to_poly(v, nvars, s) for v in kernel))


def _monomial_factorial(e):
    out = 1
    for a in e:
        out *= factorial(a)
    return out


def socle_piece(gens, d: int, nvars: int | None = None) -> GradedBasis:
    """Degree-``d`` socle of ``S/(gens)``, as reduced coset representatives.

    Representatives are supported on the monomials that are not pivots of the
    ideal slice, so they are normal forms and the basis is canonical.
    """
    gens = list(gens)
    if nvars is None:
        if not gens:
            raise InputError("nvars is required for an empty generator list")
        nvars = gens[0].nvars
    n = nvars
    low = _ideal_echelon(gens, d, n)
    high = _ideal_echelon(gens, d + 1, n)
    mons = monomials(n, d)
    idx_up = monomial_index(n, d + 1)
    standard = [j for j in range(len(mons)) if j not in low.pivots]
    # conditions: x_i * a reduces to zero modulo the degree d+1 slice
    images = []
    for j in standard:
        col = {}
        for i in range(n):
            e = list(mons[j])
            e[i] += 1
            r = high.reduce({idx_up[tuple(e)]: Fraction(1)})
            for k, c in r.items():
                col[(i, k)] = c
        images.append(col)
    keys = sorted({k for col in images for k in col})
    kpos = {k: t for t, k in enumerate(keys)}
    rows = [dict() for _ in keys]
    for t, col in enumerate(images):
        for k, c in col.items():
            rows[kpos[k]][t] = c
    kernel = nullspace(rows, len(standard))
    reps = []
    for v in kernel:
        reps.append(Poly._raw(n, {mons[standard[t]]: c for t, c in v.items()}))
    return GradedBasis.span(reps, n, d)
