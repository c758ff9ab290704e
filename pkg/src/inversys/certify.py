"""Complete-intersection certificates for annihilators of forms.

Homogeneous forms ``f_0..f_n`` of degrees ``d_i`` generate ``Ann(H)`` as a
complete intersection iff

  (i)   they form a regular sequence,
  (ii)  every ``f_i o H`` vanishes, and
  (iii) ``det(Jac(f)) o H`` is nonzero,

and then ``deg H = sum(d_i) - (n + 1)``.  :func:`verify_certificate` checks a
proposed sequence; :func:`is_complete_intersection` decides the question from
the minimal generators and builds the certificate from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from inversys.apolarity import (
    _require_form, ann_piece, contract, inverse_system_top, minimal_generators,
    socle_piece)
from inversys.errors import InputError, InvariantError
from inversys.poly import Poly, det, jacobian
from inversys.regseq import FormSystem, RankWitness, ideal_piece, is_regular_sequence

DEFAULT_BOUND = 10


@dataclass(frozen=True)
class CIType:
    degrees: tuple
    socle_degree: int

    def __post_init__(self):
        degrees = tuple(sorted(int(d) for d in self.degrees))
        object.__setattr__(self, "degrees", degrees)
        if any(d < 1 for d in degrees):
            raise InputError(f"type entries must be positive, got {degrees}")
        if sum(degrees) != self.socle_degree + len(degrees):
            raise InputError(
                f"type {degrees} has socle degree {sum(degrees) - len(degrees)}, "
                f"not {self.socle_degree}")

    @classmethod
    def of(cls, degrees) -> "CIType":
        degrees = tuple(degrees)
        return cls(degrees, sum(degrees) - len(degrees))

    @property
    def paper_conforming(self) -> bool:
        """All degrees at least 2, i.e. H involves every variable."""
        return all(d >= 2 for d in self.degrees)

    def __len__(self):
        return len(self.degrees)


@dataclass(frozen=True)
class CICertificate:
    H: Poly
    generators: tuple
    degrees: tuple
    witness: RankWitness | None
    residues: tuple
    jacobian_det: Poly
    jacobian_contraction: Poly

    @property
    def degree_ok(self) -> bool:
        return self.H.degree == sum(self.degrees) - len(self.degrees)

    @property
    def regular(self) -> bool:
        return self.witness is not None and self.witness.regular

    @property
    def annihilates(self) -> bool:
        return all(r.is_zero() for r in self.residues)

    @property
    def socle_nonzero(self) -> bool:
        return not self.jacobian_contraction.is_zero()

    @property
    def valid(self) -> bool:
        return self.degree_ok and self.regular and self.annihilates and self.socle_nonzero

    @property
    def scalar(self) -> Fraction | None:
        """Value of condition (iii) when it is a constant, else None."""
        c = self.jacobian_contraction
        return c.constant_value() if c.is_constant() else None

    @property
    def type(self) -> CIType | None:
        return CIType.of(self.degrees) if self.degree_ok else None

    def failures(self) -> list:
        out = []
        if not self.degree_ok:
            out.append("degree")
        if not self.regular:
            out.append("regular_sequence")
        if not self.annihilates:
            out.append("annihilation")
        if not self.socle_nonzero:
            out.append("jacobian")
        return out


def verify_certificate(H: Poly, forms) -> CICertificate:
    """Evaluate all three conditions on ``forms``, even after one fails."""
    _require_form(H)
    forms = tuple(forms)
    n = H.nvars
    if len(forms) != n:
        raise InputError(f"need {n} forms for {n} variables, got {len(forms)}")
    for f in forms:
        if f.nvars != n:
            raise InputError(f"form {f} has {f.nvars} variables, expected {n}")
        if not f.is_homogeneous():
            raise InputError(f"form {f} is not a nonzero homogeneous form")
    witness = is_regular_sequence(FormSystem(forms))
    residues = tuple(contract(f, H) for f in forms)
    jdet = det(jacobian(forms))
    return CICertificate(
        H=H, generators=forms, degrees=tuple(f.degree for f in forms),
        witness=witness, residues=residues, jacobian_det=jdet,
        jacobian_contraction=contract(jdet, H))


@dataclass(frozen=True)
class CIDecision:
    is_ci: bool
    socle_degree: int
    generator_degrees: tuple
    generators: tuple
    certificate: CICertificate | None

    @property
    def type(self) -> CIType | None:
        return CIType.of(self.generator_degrees) if self.is_ci else None

    @property
    def refutation(self) -> tuple | None:
        """Minimal-generator degrees when their count is not n + 1."""
        return None if self.is_ci else self.generator_degrees


def is_complete_intersection(H: Poly) -> CIDecision:
    """Decide by counting minimal generators of ``Ann(H)``.

    ``n + 1`` homogeneous generators of an ideal of finite colength in
    ``n + 1`` variables are a system of parameters in a Cohen-Macaulay ring,
    hence a regular sequence.  The certificate is still checked.
    """
    s = _require_form(H)
    mg = minimal_generators(H)
    if len(mg) != H.nvars:
        return CIDecision(False, s, mg.degrees, mg.polys, None)
    cert = verify_certificate(H, mg.polys)
    if not cert.valid:
        raise InvariantError(
            f"minimal generators of Ann({H}) failed {cert.failures()}")
    return CIDecision(True, s, mg.degrees, mg.polys, cert)


def feasible_types(s: int, n: int) -> list:
    """Nondecreasing (n+1)-tuples of degrees >= 2 summing to s + n + 1."""
    total = s + n + 1
    out = []

    def extend(prefix, lo, left, slots):
        if slots == 0:
            if left == 0:
                out.append(CIType(tuple(prefix), s))
            return
        for d in range(lo, left // slots + 1):
            extend(prefix + [d], d, left - d, slots - 1)

    extend([], 2, total, n + 1)
    return out


@dataclass(frozen=True)
class SampleReport:
    trials: int
    z1: int
    successes: int
    witness: CICertificate | None
    seed: int
    note: str = ""


def _trial_rng(seed, trial):
    # one independent substream per trial index
    return np.random.default_rng([seed, trial])


def sample_ci_witness(H: Poly, t, trials: int, seed: int,
                      bound: int = DEFAULT_BOUND) -> SampleReport:
    """Random sequences of annihilating forms, sorted by the three conditions.

    Each ``f_i`` is a combination of the basis of ``Ann(H)_{d_i}`` with
    integer coefficients drawn uniformly from ``[-bound, bound]`` by a PCG64
    generator seeded with ``(seed, trial)``.  Condition (ii) holds by
    construction; ``z1`` counts draws that are also regular sequences and
    ``successes`` those that further satisfy (iii).
    """
    s = _require_form(H)
    if not isinstance(t, CIType):
        t = CIType.of(t)
    if t.socle_degree != s:
        raise InputError(f"type {t.degrees} has socle degree {t.socle_degree}, H has degree {s}")
    if len(t) != H.nvars:
        raise InputError(f"type {t.degrees} needs {len(t)} variables, H has {H.nvars}")
    if trials <= 0:
        return SampleReport(0, 0, 0, None, seed, "no trials requested")
    bases = {d: ann_piece(H, d).polys for d in set(t.degrees)}
    empty = sorted(d for d, b in bases.items() if not b)
    if empty:
        return SampleReport(0, 0, 0, None, seed,
                            f"Ann(H) is zero in degree {empty[0]}")
    z1 = successes = 0
    witness = None
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        forms = []
        for d in t.degrees:
            coeffs = rng.integers(-bound, bound, size=len(bases[d]), endpoint=True)
            f = Poly.zero(H.nvars)
            for c, b in zip(coeffs, bases[d]):
                if c:
                    f = f + int(c) * b
            forms.append(f)
        if any(f.is_zero() for f in forms) or _dependent_by_degree(forms):
            continue
        if not is_regular_sequence(FormSystem(tuple(forms))).regular:
            continue
        z1 += 1
        if contract(det(jacobian(forms)), H).is_zero():
            continue
        successes += 1
        if witness is None:
            witness = verify_certificate(H, forms)
    return SampleReport(trials, z1, successes, witness, seed)


def _dependent_by_degree(forms) -> bool:
    # Dependent forms of one degree leave at most n generators, and an ideal
    # with at most n generators has height <= n (Krull), so it is not regular.
    by_degree = {}
    for f in forms:
        by_degree.setdefault(f.degree, []).append(f)
    return any(ideal_piece(fs, d).dim < len(fs) for d, fs in by_degree.items())


def lemma_ku_check(K_gens, J_gens, s: int, nvars: int | None = None) -> bool:
    """Whether ``soc(S/J)_s`` is nonzero, for ``K`` Gorenstein of socle degree s.

    When it is nonzero the ideals must coincide; that equality is checked
    slice by slice up to degree ``s + 1`` and the result reflects it.
    """
    K_gens, J_gens = list(K_gens), list(J_gens)
    if nvars is None:
        nvars = (K_gens or J_gens)[0].nvars
    for d in range(s + 2):
        if not ideal_piece(K_gens, d, nvars).is_subspace_of(ideal_piece(J_gens, d, nvars)):
            raise InputError(f"(K) is not contained in (J) in degree {d}")
    if inverse_system_top(K_gens, s, nvars).dim != 1:
        raise InputError(f"S/(K) is not Gorenstein of socle degree {s}")
    if socle_piece(J_gens, s, nvars).dim == 0:
        return False
    return all(ideal_piece(K_gens, d, nvars) == ideal_piece(J_gens, d, nvars)
               for d in range(s + 2))
