"""Degree-d slices of graded subspaces, stored as reduced echelon bases."""

from __future__ import annotations

from dataclasses import dataclass

from inversys.errors import InputError
from inversys.linalg import Echelon
from inversys.poly import Poly, format_poly, monomial_index, monomials


def to_vector(p: Poly, d: int) -> dict:
    """Coordinates of a degree-``d`` form in the canonical monomial basis."""
    idx = monomial_index(p.nvars, d)
    try:
        return {idx[e]: c for e, c in p.terms.items()}
    except KeyError:
        raise InputError(f"{p} is not homogeneous of degree {d}") from None


def from_vector(v: dict, nvars: int, d: int) -> Poly:
    mons = monomials(nvars, d)
    return Poly._raw(nvars, {mons[j]: c for j, c in v.items() if c})


@dataclass(frozen=True)
class GradedBasis:
    """Reduced row-echelon basis of a subspace of the degree-``degree`` forms.

    Pivots are leftmost in canonical monomial order and each pivot coefficient
    is 1, so two bases are equal exactly when they span the same subspace.
    """

    nvars: int
    degree: int
    polys: tuple

    @classmethod
    def span(cls, polys, nvars: int, d: int) -> "GradedBasis":
        ech = Echelon()
        for p in polys:
            if p.nvars != nvars:
                raise InputError(f"{p} has {p.nvars} variables, expected {nvars}")
            ech.add(to_vector(p, d))
        return cls.from_echelon(ech, nvars, d)

    @classmethod
    def from_echelon(cls, ech: Echelon, nvars: int, d: int) -> "GradedBasis":
        return cls(nvars, d, tuple(from_vector(r, nvars, d) for r in ech.rref()))

    @classmethod
    def full(cls, nvars: int, d: int) -> "GradedBasis":
        return cls(nvars, d, tuple(Poly.monomial(e) for e in monomials(nvars, d)))

    @property
    def dim(self) -> int:
        return len(self.polys)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def echelon(self) -> Echelon:
        return Echelon(to_vector(p, self.degree) for p in self.polys)

    def contains(self, p: Poly) -> bool:
        if p.is_zero():
            return True
        if not p.is_homogeneous() or p.degree != self.degree:
            return False
        return self.echelon().contains(to_vector(p, self.degree))

    def is_subspace_of(self, other: "GradedBasis") -> bool:
        if self.degree != other.degree:
            return False
        ech = other.echelon()
        return all(ech.contains(to_vector(p, self.degree)) for p in self.polys)

    def strings(self, var: str = "x") -> list:
        return [format_poly(p, var) for p in self.polys]

    def __repr__(self):
        return f"GradedBasis(degree={self.degree}, dim={self.dim}, {self.strings()})"
