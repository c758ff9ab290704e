"""
Searching for witnesses at random
=================================

Random combinations of annihilating forms of a chosen type are tested
against the three certificate conditions.
"""

from inversys import parse, sample_ci_witness
from inversys.certify import feasible_types

###############################################################################
# Three lines: almost every draw of three quadrics works.
H = parse("x0*x1*x2")
rep = sample_ci_witness(H, (2, 2, 2), trials=50, seed=42)
print(f"trials={rep.trials} regular={rep.z1} witnesses={rep.successes}")

###############################################################################
# In five variables the only feasible type is five quadrics, but the
# quadric annihilators span only four dimensions.
H = parse("x0*x1*x2*x3*x4 + x3*x4^4")
print("feasible types:", [t.degrees for t in feasible_types(5, 4)])
rep = sample_ci_witness(H, (2, 2, 2, 2, 2), trials=200, seed=42)
print(f"trials={rep.trials} regular={rep.z1} witnesses={rep.successes}")
