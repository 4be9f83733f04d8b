import random

import pytest

from drinfeldforms.fields import extension_field, finite_field
from drinfeldforms.identities import (BruteForceInstance, PartialLValue,
                                      check_lvals, check_lvals_monic,
                                      goss_degenerate_check, lemma1_check,
                                      lemma2_check, lemma3_bruteforce,
                                      pellarin_partial, stabilization_report)
from drinfeldforms.polynomials import BiPoly, UniPoly

F2 = finite_field(2)
F3 = finite_field(3)
F4 = finite_field(2, 2)
F5 = finite_field(5)

ALL_Q = [F2, F3, F4, F5]


# -- rational identities over F_q -----------------------------------------------------


@pytest.mark.parametrize("field", ALL_Q)
def test_lemma1(field):
    assert lemma1_check(field)


def test_lemma1_x_equals_y_specialization():
    # both cross-multiplied sides collapse to the same polynomial at X = Y
    for field in (F2, F3):
        q = field.q
        from drinfeldforms.identities import _products_excluding, _x_plus_u, _y_plus_u
        pi, pi_except = _products_excluding(
            field, [_y_plus_u(field, u) for u in field.elements()])
        n_sum = BiPoly.zero(field)
        for idx, u in enumerate(field.elements()):
            n_sum = n_sum + _x_plus_u(field, u) * pi_except[idx]
        yq_minus_y = BiPoly(field, {(0, q): 1, (0, 1): field.neg(1)})
        yq_minus_x = BiPoly(field, {(0, q): 1, (1, 0): field.neg(1)})
        lhs = ((pi + n_sum) * yq_minus_y).subs_t_theta()
        rhs = (yq_minus_x * pi).subs_t_theta()
        assert lhs == rhs


@pytest.mark.parametrize("field", ALL_Q)
def test_lemma2_in_range(field):
    for l in range(1, field.q + 1):
        assert lemma2_check(field, l)


def test_lemma2_negative_control():
    # outside 1 <= l <= q the identity genuinely fails
    assert not lemma2_check(F2, 3)


def test_lemma2_rejects_nonpositive_l():
    with pytest.raises(ValueError):
        lemma2_check(F3, 0)


@pytest.mark.parametrize("field", ALL_Q)
def test_goss_degenerate(field):
    for l in range(1, field.q + 1):
        assert goss_degenerate_check(field, l)


def test_goss_specific_cases():
    assert goss_degenerate_check(F2, 2)
    assert goss_degenerate_check(F5, 5)


# -- brute-force character sums ----------------------------------------------------------


def test_lemma3_n1_both_sides_equal_minus_ratio_power():
    ext, embed = extension_field(F3, 4)
    rng = random.Random(2)
    for l in (1, 2, 3):
        v = rng.randrange(ext.q)
        w = rng.randrange(1, ext.q)
        inst = BruteForceInstance(F3, ext, embed, [v], [w], l)
        assert lemma3_bruteforce(inst)
        # closed form: sum' over u of (uV/uW)^l is -(V/W)^l
        lhs = 0
        for u in range(1, F3.q):
            s = embed[u]
            ratio = ext.mul(ext.mul(s, v), ext.inv(ext.mul(s, w)))
            lhs = ext.add(lhs, ext.pow(ratio, l))
        expected = ext.neg(ext.pow(ext.mul(v, ext.inv(w)), l))
        assert lhs == expected


def test_lemma3_l1_is_trivially_true():
    inst = BruteForceInstance.random(F4, 3, 1, seed=9)
    assert lemma3_bruteforce(inst)


def test_lemma3_sweep_q3():
    rng = random.Random(77)
    for _ in range(8):
        inst = BruteForceInstance.random(F3, 2, 2, rng=rng)
        assert lemma3_bruteforce(inst)


def test_lemma3_allows_zero_v_entries():
    ext, embed = extension_field(F2, 4)
    inst = BruteForceInstance(F2, ext, embed, [0, 3], [1, 2], 2)
    assert lemma3_bruteforce(inst)


def test_dependent_w_rejected():
    ext, embed = extension_field(F3, 4)
    w = 7
    dependent = ext.add(w, w)  # 2*w is in the F_3-span of w
    with pytest.raises(ValueError):
        BruteForceInstance(F3, ext, embed, [1, 1], [w, dependent], 2)


def test_random_instance_is_reproducible():
    a = BruteForceInstance.random(F3, 2, 2, seed=5)
    b = BruteForceInstance.random(F3, 2, 2, seed=5)
    assert (a.vs, a.ws) == (b.vs, b.ws)
    c = BruteForceInstance.random(F3, 2, 2, seed=6)
    assert (a.vs, a.ws) != (c.vs, c.ws)


def test_random_instance_raises_m_for_large_n():
    inst = BruteForceInstance.random(F2, 5, 1, seed=1)
    assert inst.ext.q == 2 ** 5


# -- Pellarin partial sums ------------------------------------------------------------------


def test_partial_sum_n1_is_one():
    value = pellarin_partial(F3, 1, 1, 1)
    assert value.num == BiPoly.one(F3)
    assert value.den == UniPoly.one(F3)


@pytest.mark.parametrize("field", [F2, F3])
def test_partial_sum_n2_closed_form(field):
    # 1 + sum_gamma (t + gamma)/(theta + gamma) = (theta^q - t)/(theta^q - theta)
    q = field.q
    value = pellarin_partial(field, 1, 1, 2)
    closed_num = BiPoly(field, {(q, 0): 1, (0, 1): field.neg(1)})
    closed_den = BiPoly(field, {(q, 0): 1, (1, 0): field.neg(1)})
    assert value.num * closed_den == closed_num * value.den.to_bipoly()


def test_partial_sum_power_relation_at_every_truncation():
    p113 = pellarin_partial(F2, 1, 1, 3)
    p223 = pellarin_partial(F2, 2, 2, 3)
    assert p223.num * (p113.den ** 2).to_bipoly() == (p113.num ** 2) * p223.den.to_bipoly()


def test_partial_sum_input_validation():
    with pytest.raises(ValueError):
        pellarin_partial(F3, 0, 1, 2)
    with pytest.raises(ValueError):
        pellarin_partial(F3, 1, 1, 0)


def test_reduced_value_represents_the_same_fraction():
    value = pellarin_partial(F3, 1, 1, 3)
    reduced = value.reduced()
    assert reduced.cross_eq(value)
    assert reduced.den.degree <= value.den.degree
    assert reduced.den.is_monic


# -- L-value power relations ---------------------------------------------------------------------


@pytest.mark.parametrize("field", [F2, F3])
def test_check_lvals(field):
    for l in range(1, field.q + 1):
        for n in (1, 2, 3, 4):
            assert check_lvals(field, l, n)
            assert check_lvals_monic(field, l, n)


def test_check_lvals_specific_cases():
    assert check_lvals(F3, 2, 3)
    assert check_lvals(F2, 2, 4)


def test_check_lvals_range_enforced():
    with pytest.raises(ValueError):
        check_lvals(F2, 3, 2)
    with pytest.raises(ValueError):
        check_lvals(F3, 2, 0)


def test_stabilization_report_is_deterministic():
    rows1 = stabilization_report(F2, 1, 1, 5)
    rows2 = stabilization_report(F2, 1, 1, 5)
    assert rows1 == rows2
    assert len(rows1) == 4
    for row in rows1:
        assert set(row) == {"n", "difference_num_degree",
                            "difference_den_degree", "gap"}


def test_partial_lvalue_rejects_zero_denominator():
    with pytest.raises(ValueError):
        PartialLValue(F3, 1, 1, 1, BiPoly.one(F3), UniPoly.zero(F3))
