"""
Certifying complete intersections
=================================

A sequence of forms generates Ann(H) as a complete intersection when it
is a regular sequence, each form kills H, and the Jacobian determinant
does not.
"""

from inversys import (format_poly, is_complete_intersection, parse, parse_many,
                      verify_certificate)

###############################################################################
# A five-variable example with an explicit candidate sequence.
H = parse("x0*x1*x2*x3*x4 + x1*x2*x3*x4^2")
forms = parse_many(["x0^2", "x1^2", "x2^2", "x3^2", "x4^2 - 2*x0*x4"], 5)
cert = verify_certificate(H, forms)
print("regular sequence:", cert.witness.as_dict())
print("det(Jac) =", format_poly(cert.jacobian_det))
print("det(Jac) o H =", cert.scalar, "valid:", cert.valid)

###############################################################################
# Moving the second term onto y3 leaves too many minimal generators.
H2 = parse("x0*x1*x2*x3*x4 + x3*x4^4")
decision = is_complete_intersection(H2)
print("CI:", decision.is_ci, "minimal generator degrees:", decision.refutation)

###############################################################################
# A bad candidate is evaluated on every condition, not just the first.
bad = verify_certificate(parse("x0*x1*x2"), parse_many(["x0^2", "x1^2", "x0*x1"], 3))
print("failures:", bad.failures())
