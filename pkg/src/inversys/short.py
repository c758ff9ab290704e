"""Gorenstein algebras with Hilbert function 1,3,3,1 and Legendre cubics.

The seven models of quotients of ``Q[x0, x1, x2]`` with Hilbert function
``1,3,3,1`` are recorded in :data:`TABLE` together with their inverse
systems (plane cubics).  :func:`verify_table_row` recomputes each annihilator
from the cubic and compares it with the printed model ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from inversys.apolarity import ann_piece, contract, hilbert_function, minimal_generators
from inversys.certify import CICertificate, is_complete_intersection, verify_certificate
from inversys.errors import InputError, InvariantError, ParseError
from inversys.poly import Poly, parse, to_fraction
from inversys.regseq import ideal_piece

NVARS = 3
COMPARE_UP_TO = 4


def _param(lam) -> Fraction:
    lam = to_fraction(lam)
    if lam in (0, 1):
        raise InputError(f"lambda must differ from 0 and 1, got {lam}")
    return lam


def _vars(n=NVARS):
    return [Poly.var(n, i) for i in range(n)]


def legendre(lam) -> Poly:
    """``y1^2 y2 - y0 (y0 - y2)(y0 - lam y2)``, expanded."""
    lam = _param(lam)
    y0, y1, y2 = _vars()
    return y1 ** 2 * y2 - y0 * (y0 - y2) * (y0 - lam * y2)


def j_invariant(lam) -> Fraction:
    lam = _param(lam)
    return 256 * (lam ** 2 - lam + 1) ** 3 / (lam ** 2 * (lam - 1) ** 2)


def j_equivalent(lam1, lam2) -> bool:
    return j_invariant(lam1) == j_invariant(lam2)


def k_lambda(lam) -> list:
    """The generators ``x0 x1, F1, F2`` of the annihilator of ``legendre(lam)``."""
    lam = _param(lam)
    x0, x1, x2 = _vars()
    f1 = lam ** 2 * x0 ** 2 + lam * (1 + lam) * x0 * x2 + (lam ** 2 - lam + 1) * x2 ** 2
    f2 = lam ** 2 * x1 ** 2 + lam * x0 * x2 + (1 + lam) * x2 ** 2
    return [x0 * x1, f1, f2]


def k_lambda_scalar(lam) -> Fraction:
    """Closed form of ``det(Jac(K_lam)) o H_lam``."""
    lam = _param(lam)
    return -16 * lam ** 2 * (lam ** 2 - lam + 1)


def verify_k_lambda(lam) -> CICertificate:
    lam = _param(lam)
    cert = verify_certificate(legendre(lam), k_lambda(lam))
    if not cert.valid:
        raise InvariantError(f"K_lambda certificate fails {cert.failures()} at {lam}")
    if cert.scalar != k_lambda_scalar(lam):
        raise InvariantError(
            f"jacobian contraction {cert.scalar} differs from the closed form "
            f"{k_lambda_scalar(lam)} at lambda = {lam}")
    return cert


# Inverse systems are built in four variables because one printed row uses
# an index beyond y2; models are kept as printed text.
@dataclass(frozen=True)
class TableRow:
    row: int
    geometry: str
    model: tuple
    inverse: object


def _row2(y):
    return y[1] * (y[0] * y[1] - y[2] ** 2)


def _row3(y):
    return y[3] * (y[1] * y[2] - y[3] ** 2)


def _row4(y):
    return y[1] ** 2 * y[2] - y[0] ** 2 * (y[0] + y[2])


TABLE = (
    TableRow(1, "Three independent lines",
             ("x0^2", "x1^2", "x2^2"),
             lambda y: y[0] * y[1] * y[2]),
    TableRow(2, "Conic and a tangent line",
             ("x0^2", "x0*x3^2", "x2*x1^2", "x1^3", "x2^2 + x0*x1"),
             _row2),
    TableRow(3, "Conic and a non-tangent line",
             ("x0^2", "x1^2", "x2^2 + 6*x0*x1"),
             _row3),
    TableRow(4, "Irreducible nodal cubic",
             ("x1^2", "x0*x1", "x0^2 + x1^2 - 3*x0*x2"),
             _row4),
    TableRow(5, "Irreducible cuspidal cubic",
             ("x2^2", "x0*x1", "x0*x2", "x1^3", "x0^3 + 3*x1^2*x2"),
             lambda y: y[1] ** 2 * y[2] - y[0] ** 3),
    TableRow(6, "Elliptic Fermat curve",
             ("x1*x2", "x0*x2", "x0*x1", "x1^3 - x2^3", "x0^3 - x2^3"),
             lambda y: y[0] ** 3 + y[1] ** 3 + y[2] ** 3),
    TableRow(7, "Elliptic non Fermat curve", (), None),
)


def compact_variables(p: Poly, n: int) -> Poly:
    """Relabel the variables occurring in ``p`` as ``0, 1, ...`` in order."""
    used = sorted(p.support())
    if len(used) > n:
        raise InputError(f"{p} involves {len(used)} variables, more than {n}")
    pos = {v: k for k, v in enumerate(used)}
    terms = {}
    for e, c in p.terms.items():
        new = [0] * n
        for v, a in enumerate(e):
            if a:
                new[pos[v]] = a
        terms[tuple(new)] = c
    return Poly(n, terms)


@dataclass(frozen=True)
class TableRowReport:
    row: int
    geometry: str
    inverse_system: Poly
    hilbert_function: tuple
    generator_degrees: tuple
    generators: tuple
    is_ci: bool
    printed_model: tuple
    model_matches: bool | None
    mismatch_degrees: tuple
    flags: tuple

    @property
    def generator_count(self) -> int:
        return len(self.generator_degrees)

    @property
    def flagged(self) -> bool:
        return bool(self.flags)


def verify_table_row(row: int, lam=None) -> TableRowReport:
    """Recompute one row of the classification from its inverse system."""
    if row not in range(1, len(TABLE) + 1):
        raise InputError(f"row must be between 1 and {len(TABLE)}, got {row}")
    entry = TABLE[row - 1]
    flags = []
    if row == 7:
        if lam is None:
            raise InputError("row 7 needs a lambda value")
        lam = _param(lam)
        if j_invariant(lam) == 0:
            raise InputError("row 7 requires j(lambda) != 0")
        H = legendre(lam)
        model_polys = k_lambda(lam)
        printed = tuple(str(f) for f in model_polys)
    else:
        raw = entry.inverse(_vars(NVARS + 1))
        if any(i >= NVARS for i in raw.support()):
            flags.append("inverse system uses a variable outside y0..y2; "
                         "variables relabelled in order of index")
            H = compact_variables(raw, NVARS)
        else:
            H = raw.with_nvars(NVARS)
        printed = entry.model
        try:
            model_polys = [parse(t, NVARS) for t in printed]
        except ParseError as exc:
            flags.append(f"printed model not comparable: {exc}")
            model_polys = None

    hf = hilbert_function(H)
    decision = is_complete_intersection(H)
    mg = minimal_generators(H)
    if hf.values != (1, 3, 3, 1):
        raise InvariantError(f"row {row}: Hilbert function {hf} is not 1,3,3,1")

    matches = None
    bad = ()
    if model_polys is not None:
        stray = [str(f) for f in model_polys if not contract(f, H).is_zero()]
        if stray:
            flags.append("printed generators not annihilating the inverse system: "
                         + ", ".join(stray))
        bad = tuple(d for d in range(1, COMPARE_UP_TO + 1)
                    if ideal_piece(model_polys, d, NVARS) != ann_piece(H, d))
        matches = not bad
        if bad:
            flags.append("printed model differs from the annihilator in degree "
                         + ", ".join(str(d) for d in bad))

    return TableRowReport(
        row=row, geometry=entry.geometry, inverse_system=H,
        hilbert_function=hf.values, generator_degrees=mg.degrees,
        generators=mg.polys, is_ci=decision.is_ci, printed_model=printed,
        model_matches=matches, mismatch_degrees=bad, flags=tuple(flags))
