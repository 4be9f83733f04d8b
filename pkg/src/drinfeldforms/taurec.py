"""tau-linear operators on sequences of u-expansions, and symmetric powers.

An operator A_0 tau**0 + ... + A_s tau**s acts on a sequence {G_k} by

    (L G)_k = sum_i A_i * tau**i G_{k-i},

so order-s operators consume an s-deep window.  The two operators of
interest annihilate, respectively, the constant sequence d2 together
with the closed-form sequence {G_k} of the shadowed module, and the
sequence of their negated squares.

sym_power_matrix is the degree-l symmetric power of a 2x2 matrix in the
monomial basis X**l, X**(l-1) Y, ..., Y**l; it is multiplicative and its
determinant is (ad - bc)**((l*l + l) // 2).
"""

from .errors import PrecisionError
from .forms import t_minus_theta_pow
from .polynomials import BiPoly, lucas_binom
from .series import USeries
from .shadowed import g1k_shadowed


class TauSequence:
    """Sequence entries on a contiguous index window."""

    __slots__ = ("field", "entries", "k_min", "k_max")

    def __init__(self, entries):
        if not entries:
            raise ValueError("empty sequence window")
        keys = sorted(entries)
        if keys != list(range(keys[0], keys[-1] + 1)):
            raise ValueError("sequence window must be contiguous")
        fields = {s.field for s in entries.values()}
        if len(fields) != 1:
            raise ValueError("sequence entries live over different fields")
        self.field = fields.pop()
        self.entries = dict(entries)
        self.k_min = keys[0]
        self.k_max = keys[-1]

    @classmethod
    def constant(cls, series, k_max, k_min=0):
        return cls({k: series for k in range(k_min, k_max + 1)})

    def __getitem__(self, k):
        return self.entries[k]

    def items(self):
        return sorted(self.entries.items())

    def window(self):
        return (self.k_min, self.k_max)


class TauOperator:
    """A_0 tau**0 + ... + A_s tau**s with u-series coefficients, A_0, A_s != 0."""

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("operator needs at least one coefficient")
        if coeffs[0].is_zero or coeffs[-1].is_zero:
            raise ValueError("leading and trailing operator coefficients must be nonzero")
        fields = {c.field for c in coeffs}
        if len(fields) != 1:
            raise ValueError("operator coefficients live over different fields")
        self.field = fields.pop()
        self.coeffs = coeffs

    @property
    def order(self):
        return len(self.coeffs) - 1

    def apply(self, seq):
        """Entry k of the image is sum_i A_i * tau**i (G_{k-i})."""
        s = self.order
        if seq.k_max - seq.k_min < s:
            raise ValueError(
                f"sequence window of length {seq.k_max - seq.k_min + 1} "
                f"is too short for an order-{s} operator")
        out = {}
        for k in range(seq.k_min + s, seq.k_max + 1):
            acc = None
            for i, a in enumerate(self.coeffs):
                term = a * seq[k - i].tau(i)
                acc = term if acc is None else acc + term
            out[k] = acc
        return TauSequence(out)


def operator_l1(catalog):
    """tau**0 - g tau**1 - delta (t - theta**q) tau**2."""
    field, prec, q = catalog.field, catalog.prec, catalog.field.q
    return TauOperator([
        USeries.one(field, prec),
        -catalog.g,
        -catalog.delta.scale(t_minus_theta_pow(field, q)),
    ])


def operator_l2(catalog):
    """The order-3 annihilator of squared solutions of the order-2 equation.

    With B = g**(1+q) + delta (t - theta**q):
        tau**0 - g**(1-q) B tau**1 - delta (t - theta**q) B tau**2
               + g**(1-q) delta**(1+2q) (t - theta**q)(t - theta**(q*q))**2 tau**3
    where g**(1-q) = g * inv(g**q) (g has unit constant term).
    """
    field, prec, q = catalog.field, catalog.prec, catalog.field.q
    g, d = catalog.g, catalog.delta
    tq = t_minus_theta_pow(field, q)
    tq2 = t_minus_theta_pow(field, q * q)
    g_one_minus_q = (g * (g ** q).truncate(prec).inv()).truncate(prec)
    b = ((g ** (1 + q)).truncate(prec) + d.scale(tq)).truncate(prec)
    a3 = (g_one_minus_q * (d ** (1 + 2 * q)).truncate(prec)).truncate(prec)
    a3 = a3.scale(tq).scale(tq2 * tq2)
    if a3.is_zero:
        # the tau**3 coefficient has valuation (1 + 2q)(q - 1)
        raise PrecisionError(
            f"precision {prec} too small to represent the order-3 operator")
    return TauOperator([
        USeries.one(field, prec),
        -(g_one_minus_q * b).truncate(prec),
        -(d.scale(tq) * b).truncate(prec),
        a3,
    ])


def g_sequence(catalog, l, k_max):
    """Entries (-1)**(l+1) G_k**l for k = 0..k_max, 1 <= l <= q."""
    q = catalog.field.q
    if not 1 <= l <= q:
        raise ValueError(f"l must satisfy 1 <= l <= q, got {l}")
    entries = {}
    for k in range(k_max + 1):
        power = (g1k_shadowed(catalog, k) ** l).truncate(catalog.prec)
        entries[k] = power if l % 2 else -power
    return TauSequence(entries)


def sym_power_matrix(a, b, c, d, l):
    """Degree-l symmetric power of [[a, b], [c, d]] over F_q[theta, t].

    Basis X**l, X**(l-1) Y, ..., Y**l; entry (r, s) is the coefficient of
    X**(l-r) Y**r in (a X + c Y)**(l-s) (b X + d Y)**s, with binomials
    reduced mod p.  Multiplicative, with determinant
    (a d - b c)**((l*l + l) // 2).
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    field = a.field
    p = field.p
    pows = {}
    for name, poly in (("a", a), ("b", b), ("c", c), ("d", d)):
        row = [BiPoly.one(field)]
        for _ in range(l):
            row.append(row[-1] * poly)
        pows[name] = row
    matrix = []
    for r in range(l + 1):
        row = []
        for s in range(l + 1):
            acc = BiPoly.zero(field)
            for j in range(max(0, l - r - s), min(l - s, l - r) + 1):
                coef = (lucas_binom(l - s, j, p)
                        * lucas_binom(s, l - r - j, p)) % p
                if not coef:
                    continue
                term = pows["a"][j] * pows["c"][l - s - j]
                term = term * pows["b"][l - r - j] * pows["d"][s - l + r + j]
                acc = acc + term.scale(field.scalar(coef))
            row.append(acc)
        matrix.append(row)
    return matrix


def matrix_det(matrix):
    """Determinant by expansion over column subsets (exact, division-free)."""
    n = len(matrix)
    field = matrix[0][0].field
    memo = {}

    def minor(cols):
        if not cols:
            return BiPoly.one(field)
        cached = memo.get(cols)
        if cached is not None:
            return cached
        r = n - len(cols)
        acc = BiPoly.zero(field)
        for idx, col in enumerate(cols):
            entry = matrix[r][col]
            if entry.is_zero:
                continue
            sub = minor(cols[:idx] + cols[idx + 1:])
            term = entry * sub
            acc = acc + (term if idx % 2 == 0 else -term)
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))
