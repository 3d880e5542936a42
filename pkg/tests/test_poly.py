import math
from fractions import Fraction

import pytest

from apolar import (
    GF,
    QQ,
    DEFAULT_FIELD,
    ExactDivisionError,
    Form,
    MixedRingsError,
    NotHomogeneousError,
    ParseError,
    UnknownVariableError,
    ZeroFormError,
    exact_div,
    form_gcd,
    monomials_of_degree,
    parse_form,
    random_form,
    trial_rng,
)
from apolar.poly import divides, grlex_key


def test_monomials_of_degree_count_and_order():
    monos = monomials_of_degree(3, 2)
    assert len(monos) == math.comb(3 + 2 - 1, 2)
    assert monos[0] == (2, 0, 0)
    assert monos[-1] == (0, 0, 2)
    # strictly descending in graded lex
    keys = [grlex_key(m) for m in monos]
    assert keys == sorted(keys, reverse=True)


def test_form_constructor_validates():
    F = Form(2, QQ, [((1, 1), 2), ((2, 0), 1)])
    assert F.degree == 2 and len(F.coeffs) == 2
    with pytest.raises(NotHomogeneousError):
        Form(2, QQ, [((1, 0), 1), ((2, 0), 1)])
    with pytest.raises(MixedRingsError):
        Form(2, QQ, [((1, 0, 0), 1)])
    # duplicate monomials accumulate, zeros are dropped
    G = Form(2, QQ, [((1, 1), 1), ((1, 1), -1)])
    assert G.is_zero


def test_addition_and_scaling():
    A = parse_form("y0^2 + y1^2", 2, QQ)
    B = parse_form("y0^2 - y1^2", 2, QQ)
    assert str(A + B) == "2*y0^2"
    assert str(A - A) == "0"
    assert str(A.scale(Fraction(1, 2))) == "1/2*y0^2 + 1/2*y1^2"
    with pytest.raises(NotHomogeneousError):
        A + parse_form("y0", 2, QQ)


def test_multiplication_and_powers():
    L = parse_form("y0 + y1", 2, QQ)
    assert str(L * L) == "y0^2 + 2*y0*y1 + y1^2"
    assert str(L**3) == "y0^3 + 3*y0^2*y1 + 3*y0*y1^2 + y1^3"
    assert (L**0).degree == 0
    with pytest.raises(ValueError):
        L ** (-1)
    with pytest.raises(MixedRingsError):
        L * parse_form("y0", 2, GF(7))


def test_partial_derivative():
    F = parse_form("y0^3 + y0*y1^2", 2, QQ)
    assert str(F.partial(0)) == "3*y0^2 + y1^2"
    assert str(F.partial(1)) == "2*y0*y1"
    assert F.partial(1).partial(1) == parse_form("2*y0", 2, QQ)
    with pytest.raises(IndexError):
        F.partial(2)


def test_canonical_printing_round_trips():
    cases = [
        "y0^4 + y1^4",
        "3*y0^2*y1 - y1^3",
        "1/2*y0*y1*y2 - 5*y2^3",
        "y0^5 - y0^4*y1 + 2*y0^3*y1^2 - 3/7*y1^5",
    ]
    for text in cases:
        F = parse_form(text, 3, QQ)
        assert str(F) == text
        assert parse_form(str(F), 3, QQ) == F


def test_print_random_forms_reparse_equal():
    for t in range(30):
        rng = trial_rng(5, t)
        fld = QQ if t % 2 else DEFAULT_FIELD
        F = random_form(rng.randrange(1, 5), rng.randrange(1, 6), fld, rng)
        assert parse_form(str(F), F.nvars, fld) == F


def test_parse_accepts_constants_and_zero():
    assert parse_form("0", 3, QQ).is_zero
    C = parse_form("7", 2, QQ)
    assert C.degree == 0 and not C.is_zero
    assert parse_form("-2/3", 1, QQ) == Form.constant(1, QQ, Fraction(-2, 3))


def test_parse_error_positions():
    with pytest.raises(UnknownVariableError):
        parse_form("y0 + y5", 3, QQ)
    with pytest.raises(NotHomogeneousError):
        parse_form("y0^2 + y1", 3, QQ)
    with pytest.raises(ParseError):
        parse_form("y0 + ", 3, QQ)
    with pytest.raises(ParseError):
        parse_form("x0^2", 3, QQ)
    with pytest.raises(ParseError):
        parse_form("", 3, QQ)
    err = None
    try:
        parse_form("y0^2 + y9^2", 3, QQ)
    except UnknownVariableError as exc:
        err = exc
    assert err is not None and "position" in str(err)


def test_parse_gf_residues():
    F = parse_form("-y0^2 + 8*y1^2", 2, GF(7))
    # canonical residues: -1 -> 6, 8 -> 1
    assert str(F) == "6*y0^2 + y1^2"


def test_exact_division():
    A = parse_form("y0^2 - y1^2", 2, QQ)
    L = parse_form("y0 - y1", 2, QQ)
    assert str(exact_div(A, L)) == "y0 + y1"
    assert divides(L, A)
    with pytest.raises(ExactDivisionError):
        exact_div(parse_form("y0^2 + y1^2", 2, QQ), L)
    with pytest.raises(ZeroDivisionError):
        exact_div(A, Form.zero(2, QQ))


def test_gcd_shared_square_factor():
    # both inputs share exactly (y0+y1)^2
    A = parse_form("2*y0^3 + 4*y0^2*y1 + 2*y0*y1^2", 2, QQ)
    B = parse_form("3*y0^2*y1 + 6*y0*y1^2 + 3*y1^3", 2, QQ)
    G = form_gcd([A, B])
    assert str(G) == "y0^2 + 2*y0*y1 + y1^2"
    assert divides(G, A) and divides(G, B)


def test_gcd_monomials_and_disjoint_variables():
    A = parse_form("y0^2*y1^3", 3, QQ)
    assert str(form_gcd([A.partial(0), A.partial(1)])) == "y0*y1^2"
    # disjoint variable sets share only the trivial factor
    assert form_gcd([parse_form("y0^2", 3, QQ), parse_form("y1*y2", 3, QQ)]).degree == 0


def test_gcd_corner_cases():
    F = parse_form("y0^2 + y0*y1", 2, QQ)
    assert form_gcd([F, Form.zero(2, QQ)]) == F.monic()
    assert form_gcd([F.scale(Fraction(5))]) == F.monic()
    with pytest.raises(ZeroFormError):
        form_gcd([])
    with pytest.raises(ZeroFormError):
        form_gcd([Form.zero(2, QQ)])
    with pytest.raises(MixedRingsError):
        form_gcd([F, parse_form("y0", 2, GF(7))])


def test_gcd_of_coprime_forms_is_constant():
    A = parse_form("y0^2 + y1^2", 3, QQ)
    B = parse_form("y0*y2 + y1^2", 3, QQ)
    assert form_gcd([A, B]).degree == 0


def test_gcd_randomized_common_factor():
    """gcd(G*A, G*B) must be divisible by G; equality when A, B coprime."""
    for t in range(20):
        rng = trial_rng(7, t)
        fld = QQ if t % 2 else GF(10007)
        nv = rng.randrange(2, 4)
        G = random_form(nv, rng.randrange(1, 3), fld, rng)
        A = random_form(nv, rng.randrange(1, 3), fld, rng)
        B = random_form(nv, rng.randrange(1, 3), fld, rng)
        got = form_gcd([G * A, G * B])
        assert divides(G.monic(), got)


def test_gcd_over_prime_field():
    fld = GF(101)
    L = parse_form("y0 + 3*y1", 2, fld)
    M = parse_form("y0 + 5*y1", 2, fld)
    G = form_gcd([L**2 * M, L * M**2])
    assert G == (L * M).monic()


def test_random_form_support_size_and_determinism():
    rng = trial_rng(1, 0)
    F = random_form(4, 3, DEFAULT_FIELD, rng, terms=5)
    assert 1 <= len(F.coeffs) <= 5
    again = random_form(4, 3, DEFAULT_FIELD, trial_rng(1, 0), terms=5)
    assert F == again


def test_extend_and_variables():
    F = parse_form("y0^2 + y1^2", 2, QQ)
    G = F.extend(2)
    assert G.nvars == 4 and G.degree == 2
    assert F.variables() == {0, 1}
    assert parse_form("y1^3", 3, QQ).variables() == {1}
