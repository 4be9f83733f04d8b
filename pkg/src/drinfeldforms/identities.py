"""Exact finite-field identities and Pellarin L-series partial sums.

The rational identities are verified by clearing denominators and
comparing polynomials over F_q; nothing is ever evaluated numerically.
The character-sum identity over n-tuples is checked by brute force over
all nonzero (u_1, ..., u_n) in F_q**n inside an extension field large
enough to hold F_q-independent denominators.

Partial L-values sum chi_t(a)**alpha / a**beta over monic a of degree
below n.  They are kept as literal (numerator, denominator) pairs with
denominator the full product of the a**beta; equality tests always
cross-multiply, so no canonical form is needed.  The primed sums over
all nonzero a of bounded degree equal minus the monic sums (each monic
value is hit by the q - 1 scalar multiples), which is how the l-th power
relation between partial sums is phrased and checked here.
"""

import random
from itertools import product

from .fields import extension_field
from .polynomials import BiPoly, UniPoly, monic_below, poly_gcd


# -- polynomial identities over F_q(X, Y) -----------------------------------------


def _y_plus_u(field, u):
    return BiPoly.from_pairs(field, [((0, 1), 1), ((0, 0), u)])


def _x_plus_u(field, u):
    return BiPoly.from_pairs(field, [((1, 0), 1), ((0, 0), u)])


def _products_excluding(field, factors):
    """(full product, [product over all factors but one]) without division."""
    n = len(factors)
    prefix = [BiPoly.one(field)]
    for f in factors:
        prefix.append(prefix[-1] * f)
    suffix = [BiPoly.one(field)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = factors[i] * suffix[i + 1]
    return prefix[n], [prefix[i] * suffix[i + 1] for i in range(n)]


def lemma1_check(field):
    """1 + sum_u (X + u)/(Y + u) == (Y**q - X)/(Y**q - Y), denominators cleared."""
    q = field.q
    pi, pi_except = _products_excluding(
        field, [_y_plus_u(field, u) for u in field.elements()])
    n_sum = BiPoly.zero(field)
    for idx, u in enumerate(field.elements()):
        n_sum = n_sum + _x_plus_u(field, u) * pi_except[idx]
    yq_minus_y = BiPoly.from_pairs(
        field, [((0, q), 1), ((0, 1), field.neg(1))])
    yq_minus_x = BiPoly.from_pairs(
        field, [((0, q), 1), ((1, 0), field.neg(1))])
    return (pi + n_sum) * yq_minus_y == yq_minus_x * pi


def lemma2_check(field, l):
    """1 + sum_u ((X + u)/(Y + u))**l == (1 + sum_u (X + u)/(Y + u))**l.

    A theorem for 1 <= l <= q; larger l is still computed so that the
    failures can be reported as negative controls.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    q = field.q
    pi, pi_except = _products_excluding(
        field, [_y_plus_u(field, u) for u in field.elements()])
    lhs = pi ** l
    rhs_inner = pi
    for idx, u in enumerate(field.elements()):
        xu = _x_plus_u(field, u)
        lhs = lhs + (xu ** l) * (pi_except[idx] ** l)
        rhs_inner = rhs_inner + xu * pi_except[idx]
    return lhs == rhs_inner ** l


def goss_degenerate_check(field, l):
    """sum_u (1/(Y + u))**l == (sum_u 1/(Y + u))**l over F_q(Y)."""
    if l < 1:
        raise ValueError("l must be >= 1")
    factors = [UniPoly(field, (u, 1)) for u in field.elements()]
    n = len(factors)
    prefix = [UniPoly.one(field)]
    for f in factors:
        prefix.append(prefix[-1] * f)
    suffix = [UniPoly.one(field)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = factors[i] * suffix[i + 1]
    pi_except = [prefix[i] * suffix[i + 1] for i in range(n)]
    lhs = UniPoly.zero(field)
    rhs_inner = UniPoly.zero(field)
    for pe in pi_except:
        lhs = lhs + pe ** l
        rhs_inner = rhs_inner + pe
    return lhs == rhs_inner ** l


# -- brute-force character sums -----------------------------------------------------


class BruteForceInstance:
    """Data for one brute-force check of the n-variable power identity.

    Vs are arbitrary, Ws must be F_q-linearly independent elements of the
    extension field; independence is verified by building the F_q-span
    incrementally, which also guarantees every denominator is nonzero.
    """

    def __init__(self, base_field, ext, embed, vs, ws, l):
        if l < 1:
            raise ValueError("l must be >= 1")
        if len(vs) != len(ws) or not ws:
            raise ValueError("V and W must be nonempty lists of equal length")
        scalars = [embed[u] for u in base_field.elements()]
        span = {0}
        for w in ws:
            if w in span:
                raise ValueError("W elements are F_q-linearly dependent")
            span = {ext.add(s, ext.mul(c, w)) for s in span for c in scalars}
        self.base_field = base_field
        self.ext = ext
        self.embed = tuple(embed)
        self.vs = tuple(vs)
        self.ws = tuple(ws)
        self.l = l

    @classmethod
    def random(cls, base_field, n, l, seed=None, rng=None, m=4):
        """Draw a reproducible instance; the extension degree grows with n
        so that n independent elements exist."""
        if rng is None:
            rng = random.Random(seed)
        m = max(m, n)
        ext, embed = extension_field(base_field, m)
        scalars = [embed[u] for u in base_field.elements()]
        span = {0}
        ws = []
        while len(ws) < n:
            w = rng.randrange(ext.q)
            if w in span:
                continue
            ws.append(w)
            span = {ext.add(s, ext.mul(c, w)) for s in span for c in scalars}
        vs = [rng.randrange(ext.q) for _ in range(n)]
        return cls(base_field, ext, embed, vs, ws, l)


def lemma3_bruteforce(inst):
    """Full enumeration of sum' (sum u_i V_i / sum u_i W_i)**l
    against (-1)**(l+1) (sum' of the plain ratios)**l."""
    base, ext, l = inst.base_field, inst.ext, inst.l
    scalars = [inst.embed[u] for u in base.elements()]
    n = len(inst.ws)
    lhs = 0
    plain = 0
    for tup in product(range(base.q), repeat=n):
        if not any(tup):
            continue
        num = 0
        den = 0
        for u, v, w in zip(tup, inst.vs, inst.ws):
            s = scalars[u]
            num = ext.add(num, ext.mul(s, v))
            den = ext.add(den, ext.mul(s, w))
        ratio = ext.mul(num, ext.inv(den))
        lhs = ext.add(lhs, ext.pow(ratio, l))
        plain = ext.add(plain, ratio)
    rhs = ext.pow(plain, l)
    if l % 2 == 0:
        rhs = ext.neg(rhs)
    return lhs == rhs


# -- Pellarin L partial sums -----------------------------------------------------------


class PartialLValue:
    """sum over monic a, deg a < n, of chi_t(a)**alpha / a**beta, held as
    (numerator in F_q[theta, t], denominator = product of the a**beta)."""

    __slots__ = ("field", "alpha", "beta", "n", "num", "den")

    def __init__(self, field, alpha, beta, n, num, den):
        if den.is_zero:
            raise ValueError("denominator must be nonzero")
        self.field = field
        self.alpha = alpha
        self.beta = beta
        self.n = n
        self.num = num
        self.den = den

    def cross_eq(self, other):
        """Equality of the represented values by cross-multiplication."""
        return self.num * other.den.to_bipoly() == other.num * self.den.to_bipoly()

    def reduced(self):
        """Divide out the gcd (over F_q[theta], taken across all t-slices)."""
        g = self.den
        for slice_poly in self.num.t_slices().values():
            g = poly_gcd(g, slice_poly)
            if g.degree == 0:
                break
        if g.degree == 0 or g.is_zero:
            return self
        new_den = self.den // g
        slices = self.num.t_slices()
        terms = {}
        for j, slice_poly in slices.items():
            quotient = slice_poly // g
            for i, coeff in enumerate(quotient.coeffs):
                if coeff:
                    terms[(i, j)] = coeff
        return PartialLValue(self.field, self.alpha, self.beta, self.n,
                             BiPoly(self.field, terms), new_den)

    def __repr__(self):
        return (f"PartialLValue(alpha={self.alpha}, beta={self.beta}, "
                f"n={self.n}, deg den={self.den.degree})")


def pellarin_partial(field, alpha, beta, n):
    """Exact partial sum over monic a with deg a < n."""
    if alpha < 1 or beta < 1 or n < 1:
        raise ValueError("alpha, beta, n must all be >= 1")
    monics = monic_below(field, n)
    den = UniPoly.one(field)
    powers = []
    for a in monics:
        ab = a ** beta
        powers.append(ab)
        den = den * ab
    num = BiPoly.zero(field)
    for a, ab in zip(monics, powers):
        quotient, rem = divmod(den, ab)
        if not rem.is_zero:
            raise ArithmeticError("exact division failed")
        num = num + (a.chi_t() ** alpha) * quotient.to_bipoly()
    return PartialLValue(field, alpha, beta, n, num, den)


def check_lvals(field, l, n):
    """The l-th power relation between truncated L-values.

    Phrased over the primed sums S'_j = sum over nonzero a of degree < n
    of chi_t(a)**j / a**j, which equal minus the monic sums:
    S'_l == (-1)**(l+1) (S'_1)**l.
    """
    q = field.q
    if not 1 <= l <= q:
        raise ValueError(f"l must satisfy 1 <= l <= q, got {l}")
    if n < 1:
        raise ValueError("n must be >= 1")
    p1 = pellarin_partial(field, 1, 1, n)
    pl = pellarin_partial(field, l, l, n)
    lhs_num = -pl.num
    lhs_den = pl.den.to_bipoly()
    rhs_num = (-p1.num) ** l
    if l % 2 == 0:
        rhs_num = -rhs_num
    rhs_den = (p1.den ** l).to_bipoly()
    return lhs_num * rhs_den == rhs_num * lhs_den


def check_lvals_monic(field, l, n):
    """The equivalent relation for monic sums: pp(l, l, n) == pp(1, 1, n)**l."""
    q = field.q
    if not 1 <= l <= q:
        raise ValueError(f"l must satisfy 1 <= l <= q, got {l}")
    p1 = pellarin_partial(field, 1, 1, n)
    pl = pellarin_partial(field, l, l, n)
    return pl.num * (p1.den ** l).to_bipoly() == (p1.num ** l) * pl.den.to_bipoly()


def stabilization_report(field, alpha, beta, n_max):
    """Degrees of consecutive partial-sum differences, reported not asserted.

    The gap deg(numerator) - deg(denominator) of v_{n+1} - v_n becoming
    more negative is the exact-arithmetic shadow of convergence.
    """
    values = [pellarin_partial(field, alpha, beta, n) for n in range(1, n_max + 1)]
    rows = []
    for prev, cur in zip(values, values[1:]):
        diff_num = cur.num * prev.den.to_bipoly() - prev.num * cur.den.to_bipoly()
        den_degree = prev.den.degree + cur.den.degree
        num_degree = diff_num.theta_degree()
        rows.append({
            "n": cur.n,
            "difference_num_degree": num_degree,
            "difference_den_degree": den_degree,
            "gap": None if num_degree is None else num_degree - den_degree,
        })
    return rows
