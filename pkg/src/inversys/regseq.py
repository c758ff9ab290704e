"""Regular-sequence test and graded slices of ideals.

``n + 1`` forms in ``n + 1`` variables generate an ideal primary to the
irrelevant ideal exactly when their resultant is nonzero, and exactly when
the quotient vanishes in the critical degree ``D = sum(d_i) - n``.  The last
condition is the full column rank of one Macaulay matrix, which is what
:func:`is_regular_sequence` checks.  The resultant itself is never computed.
"""

from __future__ import annotations

from dataclasses import dataclass

from inversys.errors import InputError
from inversys.graded import GradedBasis, to_vector
from inversys.linalg import Echelon
from inversys.poly import monomial_index, monomials


def _check_forms(gens):
    gens = list(gens)
    for g in gens:
        if not g.is_homogeneous():
            raise InputError(f"generator {g} is not a nonzero homogeneous form")
    if len({g.nvars for g in gens}) > 1:
        raise InputError("generators have different variable counts")
    return gens


def ideal_piece(gens, d: int, nvars: int | None = None) -> GradedBasis:
    """Degree-``d`` slice of the ideal generated by ``gens``."""
    gens = _check_forms(gens)
    if nvars is None:
        if not gens:
            raise InputError("nvars is required for an empty generator list")
        nvars = gens[0].nvars
    return GradedBasis.from_echelon(_ideal_echelon(gens, d, nvars), nvars, d)


def _ideal_echelon(gens, d, nvars) -> Echelon:
    ech = Echelon()
    for g in gens:
        e = g.degree
        if e > d:
            continue
        for m in monomials(nvars, d - e):
            ech.add(to_vector(g.mul_monomial(m), d))
    return ech


def quotient_hf(gens, up_to: int, nvars: int | None = None) -> list:
    """``dim (S/(gens))_d`` for ``d = 0 .. up_to``."""
    gens = _check_forms(gens)
    if nvars is None:
        nvars = gens[0].nvars
    return [len(monomials(nvars, d)) - _ideal_echelon(gens, d, nvars).rank
            for d in range(up_to + 1)]


def ci_hilbert_series(degrees, up_to: int) -> list:
    """Coefficients of ``prod(1 - t^d_i) / (1 - t)^(n+1)`` through ``t^up_to``."""
    num = [1] + [0] * up_to
    for d in degrees:
        for k in range(up_to, d - 1, -1):
            num[k] -= num[k - d]
    for _ in degrees:
        # divide by (1 - t): prefix sums
        for k in range(1, up_to + 1):
            num[k] += num[k - 1]
    return num


@dataclass(frozen=True)
class FormSystem:
    """``n + 1`` homogeneous forms in ``n + 1`` variables."""

    forms: tuple

    def __post_init__(self):
        forms = tuple(self.forms)
        object.__setattr__(self, "forms", forms)
        if not forms:
            raise InputError("a form system needs at least one form")
        n = forms[0].nvars
        if any(f.nvars != n for f in forms):
            raise InputError("forms have different variable counts")
        if len(forms) != n:
            raise InputError(
                f"a form system in {n} variables needs {n} forms, got {len(forms)}")
        for f in forms:
            if not f.is_homogeneous():
                raise InputError(f"{f} is not a nonzero homogeneous form")

    @property
    def nvars(self) -> int:
        return len(self.forms)

    @property
    def degrees(self) -> tuple:
        return tuple(f.degree for f in self.forms)

    @property
    def critical_degree(self) -> int:
        return sum(self.degrees) - self.nvars + 1


@dataclass(frozen=True)
class RankWitness:
    degree: int
    rows: int
    cols: int
    rank: int
    regular: bool

    def as_dict(self) -> dict:
        return {"degree": self.degree, "rows": self.rows, "cols": self.cols,
                "rank": self.rank, "regular": self.regular}


def _macaulay_rows(sys: FormSystem, d: int) -> list:
    if d < max(sys.degrees):
        raise InputError(f"degree {d} is below the largest form degree {max(sys.degrees)}")
    n = sys.nvars
    idx = monomial_index(n, d)
    rows = []
    for f in sys.forms:
        for m in monomials(n, d - f.degree):
            rows.append({idx[tuple(a + b for a, b in zip(e, m))]: c
                         for e, c in f.terms.items()})
    return rows


def macaulay_matrix(sys: FormSystem, d: int) -> list:
    """Rows ``m * f_i`` over the degree-``d`` monomials, ordered by (i, m)."""
    width = len(monomials(sys.nvars, d))
    dense = []
    for r in _macaulay_rows(sys, d):
        row = [0] * width
        for j, c in r.items():
            row[j] = c
        dense.append(row)
    return dense


def is_regular_sequence(sys: FormSystem) -> RankWitness:
    """Rank of the Macaulay matrix in the critical degree.

    The matrix is very sparse (monomial shifts of the forms), so the rank is
    taken by sparse exact elimination rather than a dense pass.
    """
    sys = as_system(sys)
    D = sys.critical_degree
    rows = _macaulay_rows(sys, D)
    cols = len(monomials(sys.nvars, D))
    r = Echelon(rows).rank
    return RankWitness(degree=D, rows=len(rows), cols=cols, rank=r, regular=r == cols)


def as_system(forms) -> FormSystem:
    return forms if isinstance(forms, FormSystem) else FormSystem(tuple(forms))
