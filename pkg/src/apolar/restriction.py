"""Hyperplane restriction of forms and randomized checks of three facts.

Restriction substitutes a linear form's pivot variable by the induced
combination of the remaining ones, so the image lives in the ring with the
pivot variable removed.  "General" hyperplanes are drawn uniformly at
random over a large prime field with a recorded seed; each trial derives
its generator from (seed, trial index), so results do not depend on
execution order, and every recorded failure witness replays.

The three randomized checks:
  * codim_drop_check: a form essentially involving all n+1 >= 3 of its
    variables keeps codimension n after restriction by a random hyperplane.
  * restricted_rank: n+1 linearly independent forms of one degree d > 1
    with gcd 1 stay linearly independent after a random restriction.
  * check_partials_gcd: for F = prod p_j^{e_j} with distinct irreducible
    p_j, the gcd of the first partials of F is prod p_j^{e_j - 1}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import linalg
from .apolarity import codimension
from .errors import (
    HypothesisError,
    MixedRingsError,
    PreconditionError,
    ZeroFormError,
)
from .fields import DEFAULT_FIELD
from .poly import Form, form_gcd, monomials_of_degree, random_form


def trial_rng(seed: int, index: int) -> random.Random:
    """Generator for one trial; a function of (seed, index) only."""
    return random.Random((seed << 20) + index)


class LinearForm:
    """A nonzero linear form with a chosen pivot variable.

    The pivot defaults to the last index with a nonzero coefficient and is
    the variable eliminated by restriction.
    """

    __slots__ = ("coeffs", "field", "pivot")

    def __init__(self, coeffs, field, pivot=None):
        coeffs = tuple(field.coerce(c) for c in coeffs)
        if not coeffs or all(field.is_zero(c) for c in coeffs):
            raise ZeroFormError("linear form must be nonzero")
        if pivot is None:
            pivot = max(i for i, c in enumerate(coeffs) if not field.is_zero(c))
        elif not 0 <= pivot < len(coeffs) or field.is_zero(coeffs[pivot]):
            raise ValueError(f"pivot {pivot} has zero coefficient")
        self.coeffs = coeffs
        self.field = field
        self.pivot = pivot

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def as_form(self) -> Form:
        return Form(
            self.nvars,
            self.field,
            [
                (tuple(1 if j == i else 0 for j in range(self.nvars)), c)
                for i, c in enumerate(self.coeffs)
                if not self.field.is_zero(c)
            ],
        )

    def __str__(self):
        return ",".join(self.field.format_scalar(c) for c in self.coeffs)

    def __repr__(self):
        return f"<LinearForm {self} pivot={self.pivot}>"

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return (
            self.coeffs == other.coeffs
            and self.field == other.field
            and self.pivot == other.pivot
        )


def random_linear_form(n_vars: int, field=DEFAULT_FIELD, rng=None) -> LinearForm:
    """Uniform nonzero coefficient vector; pivot at the last nonzero index.

    Distinct seeds give distinct vectors with overwhelming probability."""
    if n_vars < 1:
        raise ValueError("need at least one variable")
    rng = rng or random.Random(0)
    while True:
        coeffs = tuple(field.random(rng) for _ in range(n_vars))
        if any(not field.is_zero(c) for c in coeffs):
            return LinearForm(coeffs, field)


def restrict_mod(F: Form, H: LinearForm) -> Form:
    """The image of F in the quotient by H: substitute the pivot variable
    and drop it from the ring (indices above the pivot shift down)."""
    if H.nvars != F.nvars or H.field != F.field:
        raise MixedRingsError(
            f"hyperplane in {H.nvars} vars over {H.field} cannot restrict a "
            f"{F.nvars}-variable form over {F.field}"
        )
    fld = F.field
    piv = H.pivot
    n = F.nvars - 1
    if F.is_zero:
        return Form.zero(n, fld)
    inv = fld.inv(H.coeffs[piv])
    sub = {}
    for i, a in enumerate(H.coeffs):
        if i != piv and not fld.is_zero(a):
            j = i if i < piv else i - 1
            sub[tuple(1 if t == j else 0 for t in range(n))] = fld.neg(fld.mul(a, inv))
    L = Form._raw(n, fld, sub, 1 if sub else -1)
    powers = [Form.constant(n, fld, 1)]
    out = {}
    for mono, c in F.coeffs.items():
        k = mono[piv]
        rest = mono[:piv] + mono[piv + 1 :]
        while len(powers) <= k:
            powers.append(powers[-1] * L)
        for mL, cL in powers[k].coeffs.items():
            m = tuple(a + b for a, b in zip(rest, mL))
            s = fld.add(out.get(m, fld.zero), fld.mul(c, cL))
            if fld.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
    return Form._raw(n, fld, out, F.degree if out else -1)


@dataclass
class Witness:
    """A replayable failing instance of a randomized check."""

    form: str
    nvars: int
    hyperplane: str
    observed: object

    def to_dict(self):
        return {
            "form": self.form,
            "nvars": self.nvars,
            "H": self.hyperplane,
            "observed": self.observed,
        }


@dataclass
class TrialReport:
    """Outcome of a randomized suite; failures carry replayable witnesses."""

    name: str
    trials: int
    seed: int
    field_spec: str
    witnesses: list = dc_field(default_factory=list)

    @property
    def failures(self) -> int:
        return len(self.witnesses)

    @property
    def ok(self) -> bool:
        return not self.witnesses

    def to_dict(self):
        return {
            "name": self.name,
            "trials": self.trials,
            "failures": self.failures,
            "modulus": self.field_spec,
            "seed": self.seed,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def codim_drop_check(F: Form, trials: int, seed: int = 0) -> TrialReport:
    """Check h_1(F^H) = n for random H, for F of degree >= 3 essentially
    involving all of its n+1 >= 3 variables."""
    if F.is_zero:
        raise ZeroFormError("cannot restrict the zero form")
    if F.degree < 3:
        raise HypothesisError(f"socle degree {F.degree} < 3")
    if F.nvars < 3:
        raise HypothesisError(f"codimension {F.nvars} < 3")
    c = codimension(F)
    if c != F.nvars:
        raise HypothesisError(
            f"form has codimension {c} but lives in {F.nvars} variables"
        )
    report = TrialReport(
        "codim-drop", trials, seed, F.field.spec
    )
    n = F.nvars - 1
    for t in range(trials):
        rng = trial_rng(seed, t)
        H = random_linear_form(F.nvars, F.field, rng)
        G = restrict_mod(F, H)
        observed = 0 if G.is_zero else codimension(G)
        if observed != n:
            report.witnesses.append(Witness(str(F), F.nvars, str(H), observed))
    return report


def _coefficient_matrix(forms, nvars, degree):
    index = {m: j for j, m in enumerate(monomials_of_degree(nvars, degree))}
    rows = []
    fld = forms[0].field
    for f in forms:
        row = [fld.zero] * len(index)
        for m, c in f.coeffs.items():
            row[index[m]] = c
        rows.append(row)
    return rows


def restricted_rank(forms, H: LinearForm) -> int:
    """Rank of the span of the restrictions F_i^H of n+1 independent forms
    of one degree d > 1 with gcd 1 (in n+1 variables, n >= 2)."""
    forms = list(forms)
    if not forms:
        raise PreconditionError("empty form list")
    nvars = forms[0].nvars
    fld = forms[0].field
    for f in forms[1:]:
        forms[0]._same_ring(f)
    if len(forms) != nvars:
        raise PreconditionError(
            f"expected {nvars} forms in {nvars} variables, got {len(forms)}"
        )
    if nvars < 3:
        raise PreconditionError(f"need n >= 2, got n = {nvars - 1}")
    degrees = {f.degree for f in forms}
    if len(degrees) != 1:
        raise PreconditionError(f"forms of mixed degrees {sorted(degrees)}")
    d = degrees.pop()
    if d < 2:
        raise PreconditionError(f"common degree {d} is not > 1")
    if linalg.matrix_rank(_coefficient_matrix(forms, nvars, d), fld) != len(forms):
        raise PreconditionError("forms are linearly dependent")
    if form_gcd(forms).degree != 0:
        raise PreconditionError("forms share a nonconstant common divisor")
    restricted = [restrict_mod(f, H) for f in forms]
    keep = [g for g in restricted if not g.is_zero]
    if not keep:
        return 0
    return linalg.matrix_rank(_coefficient_matrix(keep, nvars - 1, d), fld)


def quadratic_is_split(q: Form) -> bool:
    """True when the quadratic is a product of two linear forms, i.e. its
    symmetric coefficient matrix has rank <= 2 (characteristic != 2)."""
    if q.degree != 2:
        raise ValueError("expected a quadratic form")
    fld = q.field
    n = q.nvars
    mat = [[fld.zero] * n for _ in range(n)]
    for mono, c in q.coeffs.items():
        support = [i for i, e in enumerate(mono) if e]
        if len(support) == 1:
            i = support[0]
            mat[i][i] = fld.add(c, c)
        else:
            i, j = support
            mat[i][j] = c
            mat[j][i] = c
    return linalg.matrix_rank(mat, fld) <= 2


def check_partials_gcd(factors) -> bool:
    """Build F = prod p_j^{e_j} and test gcd(dF/dy_0, ..., dF/dy_n) ==
    prod p_j^{e_j - 1} up to the monic normalization."""
    factors = list(factors)
    if not factors:
        raise ValueError("empty factor list")
    base = factors[0][0]
    F = Form.constant(base.nvars, base.field, 1)
    expected = Form.constant(base.nvars, base.field, 1)
    for p, e in factors:
        base._same_ring(p)
        if p.degree < 1:
            raise ValueError("factors must be nonconstant forms")
        if e < 1:
            raise ValueError(f"multiplicity {e} < 1")
        F = F * p**e
        expected = expected * p ** (e - 1)
    partials = [F.partial(i) for i in range(F.nvars)]
    g = form_gcd(partials)
    return g == expected.monic()


# ---------------------------------------------------------------------------
# randomized suites over random instances (used by the CLI and acceptance)


def _nonzero_scalar(fld, rng):
    while True:
        c = fld.random(rng)
        if not fld.is_zero(c):
            return c


def _random_full_codim_form(nvars, degree, fld, rng, dense):
    """Random form of full codimension: random support plus all pure powers."""
    total = len(monomials_of_degree(nvars, degree))
    terms = total if dense else min(total, nvars + rng.randrange(1, 2 * nvars + 1))
    for _ in range(20):
        F = random_form(nvars, degree, fld, rng, terms=None if dense else terms)
        powers = Form(
            nvars,
            fld,
            [
                (
                    tuple(degree if j == i else 0 for j in range(nvars)),
                    _nonzero_scalar(fld, rng),
                )
                for i in range(nvars)
            ],
        )
        F = F + powers
        if not F.is_zero and codimension(F) == nvars:
            return F
    raise RuntimeError("could not sample a full-codimension form")


def run_codim_drop_suite(
    trials: int, seed: int = 0, fld=DEFAULT_FIELD
) -> TrialReport:
    """Random (F, H) pairs: degree in 3..5, codimension 3..10, mixed
    dense/sparse support; expects h_1(F^H) = n every time."""
    report = TrialReport("codim-drop", trials, seed, fld.spec)
    for t in range(trials):
        rng = trial_rng(seed, t)
        degree = rng.choice([3, 4, 5])
        nvars = rng.randrange(3, 11)
        dense = rng.random() < 0.5
        F = _random_full_codim_form(nvars, degree, fld, rng, dense)
        H = random_linear_form(nvars, fld, rng)
        G = restrict_mod(F, H)
        observed = 0 if G.is_zero else codimension(G)
        if observed != nvars - 1:
            report.witnesses.append(Witness(str(F), nvars, str(H), observed))
    return report


def run_restricted_rank_suite(
    trials: int, seed: int = 0, fld=DEFAULT_FIELD
) -> TrialReport:
    """Random independent coprime tuples; expects full rank after a random
    restriction."""
    report = TrialReport("restricted-rank", trials, seed, fld.spec)
    for t in range(trials):
        rng = trial_rng(seed, t)
        nvars = rng.randrange(3, 6)
        d = rng.randrange(2, 5)
        for _ in range(20):
            forms = [random_form(nvars, d, fld, rng) for _ in range(nvars)]
            try:
                H = random_linear_form(nvars, fld, rng)
                observed = restricted_rank(forms, H)
                break
            except PreconditionError:
                continue
        else:
            raise RuntimeError("could not sample an admissible tuple")
        if observed != nvars:
            report.witnesses.append(
                Witness(
                    "; ".join(str(f) for f in forms), nvars, str(H), observed
                )
            )
    return report


def _random_linear_factor(nvars, fld, rng):
    return random_form(nvars, 1, fld, rng)


def _random_irreducible_quadratic(nvars, fld, rng):
    while True:
        q = random_form(nvars, 2, fld, rng)
        if not quadratic_is_split(q):
            return q


def run_partials_gcd_suite(
    trials: int, seed: int = 0, fld=DEFAULT_FIELD
) -> TrialReport:
    """Random products of distinct irreducible factors (total degree <= 8,
    <= 4 variables); expects the partials' gcd to match the prediction."""
    report = TrialReport("partials-gcd", trials, seed, fld.spec)
    for t in range(trials):
        rng = trial_rng(seed, t)
        nvars = rng.randrange(3, 5)
        budget = 8
        factors = []
        seen = []
        while budget >= 1 and len(factors) < 3:
            deg = rng.choice([1, 2]) if budget >= 2 else 1
            if deg == 2:
                p = _random_irreducible_quadratic(nvars, fld, rng)
            else:
                p = _random_linear_factor(nvars, fld, rng)
            p = p.monic()
            if p in seen:
                continue
            seen.append(p)
            e = rng.randrange(1, budget // deg + 1)
            factors.append((p, e))
            budget -= deg * e
            if rng.random() < 0.3:
                break
        if not factors:
            factors = [(_random_linear_factor(nvars, fld, rng).monic(), 1)]
        if not check_partials_gcd(factors):
            desc = " * ".join(f"({p})^{e}" for p, e in factors)
            report.witnesses.append(Witness(desc, nvars, "-", "gcd mismatch"))
    return report
