"""
Contraction, annihilators and Hilbert functions
===============================================

A form H in the divided-power variables y0, y1, ... is acted on by
polynomials in x0, x1, ... through contraction.  Everything that kills H
is an ideal, and the quotient by it is a Gorenstein algebra.
"""

from inversys import (ann_piece, cat_matrix, contract, format_poly,
                      hilbert_function, minimal_generators, parse)

###############################################################################
# Contraction lowers degree.  Here x1*x2 strips two factors from y0*y1*y2.
H = parse("x0*x1*x2")
print("x1*x2 o H =", format_poly(contract(parse("x1*x2", 3), H), "y"))

###############################################################################
# The catalecticant matrix in degree 2 pairs quadrics of S with linear
# forms of the dual ring.  Its left kernel is the degree-2 annihilator.
for row in cat_matrix(H, 2):
    print(" ".join(str(c) for c in row))
print("Ann(H)_2 =", ann_piece(H, 2).strings())

###############################################################################
# The Hilbert function is read off from catalecticant ranks and is
# symmetric about half the degree of H.
for text in ["x0*x1*x2", "x1^2*x2 - x0^3", "x0^3 + x1^3 + x2^3"]:
    F = parse(text)
    mg = minimal_generators(F)
    print(f"{format_poly(F, 'y'):<24} HF = {hilbert_function(F)}  "
          f"generators in degrees {mg.degrees}")
