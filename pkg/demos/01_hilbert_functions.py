"""Forms, catalecticants, and Hilbert functions.

A homogeneous polynomial F of degree e in variables y0..y{n-1} generates a
graded module under differentiation: degree-i operators send F to its
i-th order partial derivatives.  The rank of that pairing, recorded for
every i, is the Hilbert function of an artinian Gorenstein algebra, and
every such algebra arises this way.  This script walks through the basic
machinery on small explicit examples.
"""

from apolar import (
    QQ,
    DEFAULT_FIELD,
    apply_operator,
    catalecticant,
    codimension,
    hilbert_function,
    parse_form,
    power_sum_form,
)

# Forms are parsed from a small ASCII grammar: integer or a/b coefficients,
# variables y0, y1, ..., '^' for powers, '*' between factors.
F = parse_form("y0^3 + 3*y0*y1^2 - y2^3", 3, QQ)
print("F =", F)
print("degree:", F.degree, " variables:", sorted(F.variables()))

# Differential operators act by repeated partial differentiation.  The
# operator x0*x1 (encoded by its exponent vector) sends F to d^2F/dy0dy1.
print("\nx0 . F =", apply_operator((1, 0, 0), F))
print("x0*x1 . F =", apply_operator((1, 1, 0), F))
print("x1^2 . F =", apply_operator((0, 2, 0), F))

# The i-th catalecticant pairs degree-i operators against the monomials of
# F's i-th derivatives; its exact rank is h_i.
C = catalecticant(F, 1)
print("\ncatalecticant i=1 is", len(C.row_monomials), "x", len(C.col_monomials))
for row in C.dense():
    print("  ", row)
print("rank:", C.rank())

print("\nHilbert function of F:", hilbert_function(F))
print("codimension (essential variables):", codimension(F))

# Power sums give the flat profile (1, r, ..., r, 1) in every socle degree.
for e in (3, 4, 5):
    P = power_sum_form(6, e, QQ)
    print(f"\nsum of 6 variables to the power {e}:", hilbert_function(P))

# The same computations run over a large prime field; ranks can only drop
# mod p, and for these examples they do not.
P = power_sum_form(6, 4, DEFAULT_FIELD)
print("\nsame power sum mod 2147483647:", hilbert_function(P))

# A form using fewer essential variables than it appears to: the pairing
# sees through linear changes of coordinates.
G = parse_form("y0^2 + 2*y0*y1 + y1^2", 2, QQ)  # = (y0+y1)^2
print("\nG =", G, " codimension:", codimension(G))
