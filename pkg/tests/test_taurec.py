import random

import pytest

from drinfeldforms.fields import finite_field
from drinfeldforms.forms import FormCatalog
from drinfeldforms.polynomials import BiPoly
from drinfeldforms.series import USeries
from drinfeldforms.shadowed import g1k_shadowed
from drinfeldforms.taurec import (TauOperator, TauSequence, g_sequence,
                                  matrix_det, operator_l1, operator_l2,
                                  sym_power_matrix)

F2 = finite_field(2)
F3 = finite_field(3)
F5 = finite_field(5)


def rand_bipoly(field, rng, max_deg=2, terms=3):
    out = BiPoly(field, {(rng.randrange(max_deg + 1), rng.randrange(max_deg + 1)):
                         rng.randrange(1, field.q) for _ in range(terms)})
    return out if not out.is_zero else BiPoly.one(field)


# -- operators and sequences -------------------------------------------------------


def test_identity_operator_fixes_sequences():
    cat = FormCatalog(F3, 20)
    op = TauOperator([USeries.one(F3, 20)])
    seq = g_sequence(cat, 1, 3)
    image = op.apply(seq)
    for k, entry in image.items():
        assert entry.agrees_with(seq[k])


@pytest.mark.parametrize("field", [F2, F3, finite_field(2, 2), F5])
def test_l1_annihilates_constant_d2(field):
    cat = FormCatalog(field, min(field.q ** 3, 40))
    image = operator_l1(cat).apply(TauSequence.constant(cat.d2, 4))
    for _, entry in image.items():
        assert entry.is_zero
        assert entry.prec >= cat.prec


@pytest.mark.parametrize("field", [F2, F3])
def test_l1_annihilates_closed_form_sequence(field):
    cat = FormCatalog(field, field.q ** 3)
    image = operator_l1(cat).apply(g_sequence(cat, 1, 5))
    for _, entry in image.items():
        assert entry.is_zero


@pytest.mark.parametrize("field", [F2, F3])
def test_l2_annihilates_squared_sequence(field):
    cat = FormCatalog(field, field.q ** 3)
    image = operator_l2(cat).apply(g_sequence(cat, 2, 5))
    for _, entry in image.items():
        assert entry.is_zero
        assert entry.prec >= cat.prec


def test_operator_orders_and_leading_coefficients():
    cat = FormCatalog(F3, 27)
    l1, l2 = operator_l1(cat), operator_l2(cat)
    assert l1.order == 2 and l2.order == 3
    assert l1.coeffs[0] == USeries.one(F3, 27)
    assert l2.coeffs[0] == USeries.one(F3, 27)


def test_operator_rejects_zero_ends():
    with pytest.raises(ValueError):
        TauOperator([USeries.zero(F3, 5), USeries.one(F3, 5)])
    with pytest.raises(ValueError):
        TauOperator([USeries.one(F3, 5), USeries.zero(F3, 5)])


def test_window_too_short():
    cat = FormCatalog(F3, 27)
    seq = TauSequence.constant(cat.d2, 1)
    with pytest.raises(ValueError):
        operator_l2(cat).apply(seq)


def test_l2_needs_enough_precision():
    from drinfeldforms.errors import PrecisionError
    # the tau^3 coefficient has valuation (1 + 2q)(q - 1) = 14 for q = 3
    with pytest.raises(PrecisionError):
        operator_l2(FormCatalog(F3, 9))


def test_sequence_window_validation():
    series = USeries.one(F3, 5)
    with pytest.raises(ValueError):
        TauSequence({0: series, 2: series})
    seq = TauSequence({0: series, 1: series})
    assert seq.window() == (0, 1)


# -- g_sequence ----------------------------------------------------------------------


def test_g_sequence_entries():
    cat = FormCatalog(F3, 20)
    seq1 = g_sequence(cat, 1, 2)
    assert (seq1[1] + cat.g).is_zero
    seq2 = g_sequence(cat, 2, 2)
    minus_one = USeries.one(F3, 20).scale(F3.neg(1))
    assert seq2[0] == minus_one
    # entry k of the squared sequence is minus the square of the base entry
    base = g1k_shadowed(cat, 2)
    assert (seq2[2] + (base * base).truncate(20)).is_zero


def test_g_sequence_range_check():
    cat = FormCatalog(F3, 10)
    with pytest.raises(ValueError):
        g_sequence(cat, 4, 3)


# -- symmetric powers ------------------------------------------------------------------


def test_sym_power_l1_is_the_matrix():
    rng = random.Random(4)
    a, b, c, d = (rand_bipoly(F3, rng) for _ in range(4))
    m = sym_power_matrix(a, b, c, d, 1)
    assert m == [[a, b], [c, d]]


def test_sym_power_of_identity():
    one, zero = BiPoly.one(F3), BiPoly.zero(F3)
    m = sym_power_matrix(one, zero, zero, one, 2)
    assert m == [[one, zero, zero], [zero, one, zero], [zero, zero, one]]


@pytest.mark.parametrize("field", [F2, F3, F5])
def test_sym_power_determinant(field):
    rng = random.Random(field.q)
    for l in (1, 2, 3, 4):
        for _ in range(8):
            a, b, c, d = (rand_bipoly(field, rng) for _ in range(4))
            det = matrix_det(sym_power_matrix(a, b, c, d, l))
            assert det == (a * d - b * c) ** ((l * l + l) // 2)


@pytest.mark.parametrize("l", [2, 3])
def test_sym_power_multiplicative(l):
    rng = random.Random(100 + l)
    a, b, c, d = (rand_bipoly(F3, rng) for _ in range(4))
    a2, b2, c2, d2 = (rand_bipoly(F3, rng) for _ in range(4))
    m = sym_power_matrix(a, b, c, d, l)
    n = sym_power_matrix(a2, b2, c2, d2, l)
    mn = sym_power_matrix(a * a2 + b * c2, a * b2 + b * d2,
                          c * a2 + d * c2, c * b2 + d * d2, l)
    zero = BiPoly.zero(F3)
    for i in range(l + 1):
        for j in range(l + 1):
            entry = zero
            for k in range(l + 1):
                entry = entry + m[i][k] * n[k][j]
            assert entry == mn[i][j]


def test_sym_power_rejects_bad_l():
    one = BiPoly.one(F3)
    with pytest.raises(ValueError):
        sym_power_matrix(one, one, one, one, 0)
