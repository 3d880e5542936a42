"""Catalecticant matrices and Hilbert functions of apolar algebras.

The polynomial ring in the dual variables acts on forms by partial
differentiation: a degree-i operator monomial x^a sends F to the iterated
derivative d^a F.  The i-th catalecticant of a degree-e form records, for
every degree-i operator monomial (row) and every degree-(e-i) monomial
(column), the coefficient of the column monomial in the image.  Its exact
rank is the i-th value of the Hilbert function of the apolar algebra.
"""

from __future__ import annotations

import math

from . import linalg
from .errors import MixedRingsError, ZeroFormError
from .poly import Form, monomial_index, monomials_of_degree


class HilbertFunction(tuple):
    """Hilbert function values (h_0, ..., h_e); prints as "(1,13,12,13,1)"."""

    def __str__(self):
        return "(" + ",".join(str(v) for v in self) + ")"

    @property
    def socle_degree(self) -> int:
        return len(self) - 1

    @property
    def codimension(self) -> int:
        return self[1] if len(self) > 1 else 0

    @property
    def is_symmetric(self) -> bool:
        return all(self[i] == self[-1 - i] for i in range(len(self)))

    @classmethod
    def parse(cls, text: str) -> "HilbertFunction":
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError(f"bad Hilbert function text {text!r}")
        return cls(int(part) for part in text[1:-1].split(","))


class CatalecticantMatrix:
    """Sparse catalecticant with explicit row/column monomial indexing."""

    __slots__ = (
        "source_degree",
        "form_degree",
        "nvars",
        "field",
        "row_monomials",
        "col_monomials",
        "entries",
        "_rank",
    )

    def __init__(self, source_degree, form_degree, nvars, field, entries):
        self.source_degree = source_degree
        self.form_degree = form_degree
        self.nvars = nvars
        self.field = field
        self.row_monomials = monomials_of_degree(nvars, source_degree)
        self.col_monomials = monomials_of_degree(nvars, form_degree - source_degree)
        self.entries = entries
        self._rank = None

    @property
    def nrows(self) -> int:
        return len(self.row_monomials)

    @property
    def ncols(self) -> int:
        return len(self.col_monomials)

    def entry(self, i: int, j: int):
        return self.entries.get((i, j), self.field.zero)

    def dense(self):
        zero = self.field.zero
        out = [[zero] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def rank(self) -> int:
        if self._rank is None:
            self._rank = linalg.sparse_rank(
                self.entries, self.nrows, self.ncols, self.field
            )
        return self._rank

    def __repr__(self):
        return (
            f"<Catalecticant i={self.source_degree} of degree-{self.form_degree} "
            f"form: {self.nrows}x{self.ncols}, {len(self.entries)} nonzero>"
        )


def _sub_monomials(mono, i):
    """Exponent vectors a <= mono with total degree i."""
    out = []

    def rec(pos, left, prefix):
        if pos == len(mono):
            if left == 0:
                out.append(tuple(prefix))
            return
        lo = max(0, left - sum(mono[pos + 1 :]))
        for k in range(min(mono[pos], left), lo - 1, -1):
            prefix.append(k)
            rec(pos + 1, left - k, prefix)
            prefix.pop()

    rec(0, i, [])
    return out


def apply_operator(op, F: Form) -> Form:
    """Apply the differential operator monomial x^op to F."""
    op = tuple(op)
    if len(op) != F.nvars:
        raise MixedRingsError(
            f"operator in {len(op)} variables applied to a {F.nvars}-variable form"
        )
    if any(e < 0 for e in op):
        raise ValueError(f"negative exponent in operator {op}")
    field = F.field
    out = {}
    for mono, c in F.coeffs.items():
        if all(m >= o for m, o in zip(mono, op)):
            factor = 1
            for m, o in zip(mono, op):
                factor *= math.perm(m, o)
            scaled = field.mul(c, field.from_int(factor))
            if not field.is_zero(scaled):
                out[tuple(m - o for m, o in zip(mono, op))] = scaled
    return Form._raw(F.nvars, field, out, F.degree - sum(op) if out else -1)


def catalecticant(F: Form, i: int) -> CatalecticantMatrix:
    """The i-th catalecticant matrix of F; requires 0 <= i <= deg F."""
    if not 0 <= i <= F.degree:
        raise ValueError(
            f"catalecticant degree {i} out of range for a degree-{F.degree} form"
        )
    field = F.field
    n = F.nvars
    row_index = monomial_index(n, i)
    col_index = monomial_index(n, F.degree - i)
    entries = {}
    for mono, c in F.coeffs.items():
        for op in _sub_monomials(mono, i):
            factor = 1
            for m, o in zip(mono, op):
                factor *= math.perm(m, o)
            v = field.mul(c, field.from_int(factor))
            if not field.is_zero(v):
                col = tuple(m - o for m, o in zip(mono, op))
                entries[(row_index[op], col_index[col])] = v
    return CatalecticantMatrix(i, F.degree, n, field, entries)


def hilbert_function(F: Form) -> HilbertFunction:
    """Exact Hilbert function of the apolar algebra of a nonzero form."""
    if F.is_zero:
        raise ZeroFormError("Hilbert function of the zero form")
    return HilbertFunction(catalecticant(F, i).rank() for i in range(F.degree + 1))


def codimension(F: Form) -> int:
    """Dimension of the span of the first partials (the number of essential
    variables of F)."""
    if F.is_zero:
        raise ZeroFormError("codimension of the zero form")
    if F.degree == 0:
        return 0
    return catalecticant(F, 1).rank()
