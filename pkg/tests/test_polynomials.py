import random

import pytest

from drinfeldforms.fields import finite_field
from drinfeldforms.polynomials import (BiPoly, UniPoly, chi_t, enumerate_monic,
                                       lucas_binom, monic_below, poly_gcd,
                                       tau_coeff)

F2 = finite_field(2)
F3 = finite_field(3)


def rand_unipoly(field, rng, max_deg):
    return UniPoly(field, [rng.randrange(field.q) for _ in range(max_deg + 1)])


def rand_bipoly(field, rng, max_deg=3, terms=4):
    return BiPoly(field, {(rng.randrange(max_deg + 1), rng.randrange(max_deg + 1)):
                          rng.randrange(field.q) for _ in range(terms)})


# -- monic enumeration ------------------------------------------------------------


def test_enumerate_monic_degree_zero():
    assert enumerate_monic(F2, 0) == [UniPoly.one(F2)]


def test_enumerate_monic_degree_one_q2():
    theta = UniPoly.gen(F2)
    assert enumerate_monic(F2, 1) == [theta, theta + UniPoly.one(F2)]


def test_enumerate_monic_count_and_shape():
    polys = enumerate_monic(F3, 2)
    assert len(polys) == 9
    assert len(set(p.coeffs for p in polys)) == 9
    for p in polys:
        assert p.is_monic and p.degree == 2


def test_enumerate_monic_deterministic_lexicographic():
    first = enumerate_monic(F3, 2)
    again = enumerate_monic(F3, 2)
    assert first == again
    vectors = [p.coeffs[:-1] for p in first]
    assert vectors == sorted(vectors)


def test_monic_below():
    assert len(monic_below(F3, 3)) == 1 + 3 + 9


# -- chi_t ------------------------------------------------------------------------


def test_chi_t_examples():
    theta = UniPoly.gen(F2)
    assert chi_t(theta * theta + theta) == BiPoly(F2, {(0, 2): 1, (0, 1): 1})
    assert chi_t(UniPoly.one(F3)) == BiPoly.one(F3)


def test_chi_t_is_ring_homomorphism_exhaustive():
    polys = []
    for d in range(4):
        polys.extend(enumerate_monic(F2, d))
    for a in polys:
        for b in polys:
            assert chi_t(a * b) == chi_t(a) * chi_t(b)
            assert chi_t(a + b) == chi_t(a) + chi_t(b)


# -- tau on coefficients ------------------------------------------------------------


def test_tau_coeff_examples():
    q = F3.q
    theta_minus_t = BiPoly(F3, {(1, 0): 1, (0, 1): F3.neg(1)})
    assert tau_coeff(theta_minus_t, 1) == BiPoly(F3, {(q, 0): 1, (0, 1): F3.neg(1)})
    rng = random.Random(5)
    c = rand_bipoly(F3, rng)
    assert tau_coeff(c, 0) == c


def test_tau_coeff_is_ring_homomorphism():
    rng = random.Random(17)
    for _ in range(25):
        c = rand_bipoly(F3, rng, max_deg=5)
        d = rand_bipoly(F3, rng, max_deg=5)
        assert tau_coeff(c * d, 1) == tau_coeff(c, 1) * tau_coeff(d, 1)
        assert tau_coeff(c + d, 2) == tau_coeff(c, 2) + tau_coeff(d, 2)


def test_tau_coeff_composes():
    rng = random.Random(23)
    c = rand_bipoly(F3, rng)
    assert tau_coeff(tau_coeff(c, 1), 2) == tau_coeff(c, 3)


def test_bipoly_mul_against_integer_oracle():
    # independent dense convolution over F_p, p prime
    rng = random.Random(3)
    for _ in range(20):
        a = rand_bipoly(F3, rng)
        b = rand_bipoly(F3, rng)
        expected = {}
        for (i1, j1), v1 in a.terms.items():
            for (i2, j2), v2 in b.terms.items():
                key = (i1 + i2, j1 + j2)
                expected[key] = (expected.get(key, 0) + v1 * v2) % 3
        expected = {k: v for k, v in expected.items() if v}
        assert (a * b).terms == expected


def test_bipoly_frobenius_is_qth_power():
    rng = random.Random(29)
    for field in (F2, F3, finite_field(2, 2)):
        c = rand_bipoly(field, rng)
        direct = BiPoly.one(field)
        for _ in range(field.q):
            direct = direct * c
        assert c.frobenius(1) == direct


def test_bipoly_subs_and_swap():
    # theta - t vanishes at t = theta; theta + t collapses to 2 theta
    tm = BiPoly(F3, {(1, 0): 1, (0, 1): F3.neg(1)})
    assert tm.subs_t_theta().is_zero
    tp = BiPoly(F3, {(1, 0): 1, (0, 1): 1})
    assert tp.subs_t_theta() == BiPoly(F3, {(1, 0): 2})
    c = BiPoly(F3, {(1, 0): 1, (0, 1): 2})
    assert c.swap_vars() == BiPoly(F3, {(0, 1): 1, (1, 0): 2})


# -- univariate helpers ------------------------------------------------------------


def test_unipoly_divmod_property():
    rng = random.Random(7)
    for _ in range(40):
        a = rand_unipoly(F3, rng, 8)
        b = rand_unipoly(F3, rng, 3)
        if b.is_zero:
            continue
        quo, rem = divmod(a, b)
        assert quo * b + rem == a
        assert rem.is_zero or rem.degree < b.degree


def test_unipoly_pow_q_fast_path():
    rng = random.Random(9)
    a = rand_unipoly(F3, rng, 4)
    slow = UniPoly.one(F3)
    for _ in range(9):
        slow = slow * a
    assert a ** 9 == slow


def test_poly_gcd():
    theta = UniPoly.gen(F3)
    one = UniPoly.one(F3)
    g = (theta + one) * (theta + theta)
    a = g * (theta * theta + one)
    b = g * (theta + one)
    d = poly_gcd(a, b)
    assert (a % d).is_zero and (b % d).is_zero
    assert d.is_monic
    assert (d % (theta + one)).is_zero


def test_zero_polynomial_degree_is_sentinel():
    assert UniPoly.zero(F3).degree is None
    assert BiPoly.zero(F3).theta_degree() is None


# -- Lucas binomials ------------------------------------------------------------------


def test_lucas_examples():
    assert lucas_binom(6, 3, 2) == 0
    assert lucas_binom(6, 2, 3) == 0
    for p in (2, 3, 5):
        for n in range(10):
            assert lucas_binom(n, 0, p) == 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_lucas_against_pascal(p):
    # independent Pascal-triangle oracle mod p
    limit = 64
    row = [1]
    for n in range(limit + 1):
        for i in range(n + 1):
            assert lucas_binom(n, i, p) == row[i]
        row = [1] + [(row[i] + row[i + 1]) % p for i in range(n)] + [1]


def test_lucas_vanishing_witness():
    # C(l(q-1), i(q-1)) = 0 mod p inside the stated range, q = 3, l = 3, i = 1
    assert lucas_binom(3 * 2, 1 * 2, 3) == 0
