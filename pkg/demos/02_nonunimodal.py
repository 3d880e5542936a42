"""The smallest nonunimodal Gorenstein Hilbert function.

Multiplying each cubic monomial in three variables by its own fresh
variable and summing gives a quartic in 3 + 10 = 13 variables whose
Hilbert function is (1, 13, 12, 13, 1): it dips in the middle.  No
Gorenstein Hilbert function of socle degree 4 with fewer variables does
that, and 12 is the least possible middle entry at codimension 13.
"""

from apolar import (
    QQ,
    DEFAULT_FIELD,
    bipartite_monomial_form,
    hilbert_function,
    padded_form,
    random_linear_form,
    restrict_mod,
    trial_rng,
)

F = bipartite_monomial_form(3, 4, QQ)
print("F =", F)
print("variables:", F.nvars, " terms:", len(F.coeffs))

hf = hilbert_function(F)
print("Hilbert function:", hf)
print("nonunimodal middle:", hf[2], "<", hf[1])

# The same computation by exact rational elimination and mod a word-sized
# prime; both routes must agree exactly here.
hf_p = hilbert_function(bipartite_monomial_form(3, 4, DEFAULT_FIELD))
print("mod-p recomputation:", hf_p)

# Cutting by a random hyperplane drops the codimension by exactly one, and
# the middle entry cannot grow: every random cut lands on (1,12,12,12,1).
Fp = bipartite_monomial_form(3, 4, DEFAULT_FIELD)
for t in range(3):
    H = random_linear_form(13, DEFAULT_FIELD, trial_rng(0, t))
    print(f"restriction {t}:", hilbert_function(restrict_mod(Fp, H)))

# Padding with fresh power-sum variables raises every middle entry by one
# per variable, giving nonunimodal examples in all larger codimensions.
for extra in (1, 2, 3):
    P = padded_form(F, extra)
    print(f"padded by {extra}:", hilbert_function(P))

# Smaller instances of the same bipartite construction stay unimodal; the
# dip only appears once the multiplier block outweighs the base block.
for m in (1, 2):
    B = bipartite_monomial_form(m, 4, QQ)
    print(f"bipartite({m}, 4) in {B.nvars} variables:", hilbert_function(B))
