"""
Algebras with Hilbert function 1,3,3,1
======================================

Each plane cubic gives such an algebra.  Smooth cubics in Legendre form
yield complete intersections of three quadrics.
"""

from fractions import Fraction

from inversys import format_poly
from inversys.short import TABLE, j_invariant, k_lambda, verify_k_lambda, verify_table_row

###############################################################################
# The Legendre family: an explicit generating set and its socle scalar.
for lam in [2, 3, Fraction(1, 2), Fraction(5, 3)]:
    cert = verify_k_lambda(lam)
    gens = "; ".join(format_poly(f) for f in k_lambda(lam))
    print(f"lambda={lam}: j={j_invariant(lam)}  scalar={cert.scalar}  [{gens}]")

###############################################################################
# The classification table, recomputed from each inverse system.
for entry in TABLE:
    rep = verify_table_row(entry.row, 2 if entry.row == 7 else None)
    verdict = "CI" if rep.is_ci else "not CI"
    print(f"{rep.row}. {rep.geometry:<30} {rep.generator_count} generators, {verdict}")
    for flag in rep.flags:
        print("     flag:", flag)
