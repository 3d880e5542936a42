"""Monte Carlo checks of the three restriction facts the tables rely on.

Genericity claims ("for a general linear form H ...") are operationalized
by sampling H uniformly over a large prime field and replaying any
counterexample found.  Three independent facts are exercised:

  1. codimension drop: restricting a full-codimension form of degree >= 3
     by a random hyperplane loses exactly one essential variable;
  2. restricted rank: n+1 coprime, linearly independent forms of equal
     degree stay independent after a random substitution;
  3. partials gcd: the gcd of all first partials of a factored form
     recovers exactly the multiplicity-lowered product.
"""

from apolar import (
    QQ,
    DEFAULT_FIELD,
    LinearForm,
    check_partials_gcd,
    codimension,
    form_gcd,
    hilbert_function,
    parse_form,
    power_sum_form,
    random_linear_form,
    restrict_mod,
    restricted_rank,
    run_codim_drop_suite,
    run_partials_gcd_suite,
    run_restricted_rank_suite,
    trial_rng,
)

# --- 1. codimension drop ---------------------------------------------------
F = parse_form("y0^2 + y1^2 + y2^2", 3, QQ) ** 2
print("F =", F)
print("codimension:", codimension(F))
H = LinearForm([QQ.one, QQ.zero, QQ.zero], QQ, pivot=0)
G = restrict_mod(F, H)
print("F cut by y0 =", G)
print("codimension after the cut:", codimension(G))

report = run_codim_drop_suite(50, seed=11)
print(f"\nrandom suite: {report.trials} trials, {report.failures} failures")

# --- 2. restricted rank ----------------------------------------------------
# The genericity hypothesis matters: pure cubes cut by a coordinate
# hyperplane lose a dimension, because the substitution kills y0^3 outright.
cubes = [parse_form(f"y{i}^3", 3, QQ) for i in range(3)]
rank = restricted_rank(cubes, H)
print("\npure cubes cut by y0 have restricted rank", rank, "(full rank would be 3)")

report = run_restricted_rank_suite(50, seed=3)
print(f"random coprime tuples: {report.trials} trials, {report.failures} failures")

# --- 3. gcd of partials ----------------------------------------------------
L1 = parse_form("y0 + y1", 3, QQ)
L2 = parse_form("y2", 3, QQ)
F = L1**3 * L2
partials = [F.partial(i) for i in range(3) if not F.partial(i).is_zero]
print("\nF =", F)
print("gcd of partials:", form_gcd(partials))
print("matches multiplicity-lowered product:", check_partials_gcd([(L1, 3), (L2, 1)]))

report = run_partials_gcd_suite(50, seed=5)
print(f"random factored forms: {report.trials} trials, {report.failures} failures")

# Any failure would be recorded as a replayable witness:
print("\nwitness list (empty when all trials pass):",
      run_codim_drop_suite(5, seed=1).to_dict()["witnesses"])

# Restricting a power sum of six fourth powers leaves six powers in five
# variables: the codimension drops, the middle rank does not have to.
P = power_sum_form(6, 4, DEFAULT_FIELD)
Hp = random_linear_form(6, DEFAULT_FIELD, trial_rng(2, 0))
print("\npower sum:", hilbert_function(P))
print("restricted:", hilbert_function(restrict_mod(P, Hp)))
