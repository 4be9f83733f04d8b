"""Truncated power series in u over F_q[theta, t], with exact precision tracking.

A USeries with precision P stands for a series known modulo u**P.  Every
operation computes the precision its output genuinely has:

  add:        min(P_f, P_g)
  mul:        min(P_f + val(g), P_g + val(f))
  tau**k:     P * q**k     (exponents scale by q**k, theta twists)
  f**(q**k):  P * q**k     (Frobenius: freshman's dream in char p)

where val is the u-adic valuation of the stored truncation (val of a
series with no stored terms is its precision).  Precisions never exceed
what the inputs justify, so recomputing at higher precision and
truncating always reproduces lower-precision results bit for bit.

The module also provides the twisted-polynomial coefficients of the rank
one module phi with phi(theta) = theta + tau, and the exact expansion of
u_c = 1 / phi_c(1/u) for monic c.
"""

from .errors import PrecisionError
from .polynomials import BiPoly, UniPoly, _same_field


class USeries:
    """Truncated series sum(a_n * u**n, n < prec) with a_n in F_q[theta, t]."""

    __slots__ = ("field", "prec", "coeffs")

    def __init__(self, field, prec, coeffs=None):
        if prec <= 0:
            raise PrecisionError(f"series precision must be positive, got {prec}")
        self.field = field
        self.prec = prec
        self.coeffs = {n: c for n, c in (coeffs or {}).items()
                       if n < prec and not c.is_zero}

    @classmethod
    def _raw(cls, field, prec, coeffs):
        # internal: trusts a fresh dict with in-range keys and nonzero values
        if prec <= 0:
            raise PrecisionError(f"series precision must be positive, got {prec}")
        obj = object.__new__(cls)
        obj.field = field
        obj.prec = prec
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, field, prec):
        return cls._raw(field, prec, {})

    @classmethod
    def one(cls, field, prec):
        return cls._raw(field, prec, {0: BiPoly.one(field)})

    @classmethod
    def monomial(cls, field, prec, n, coeff=None):
        if coeff is None:
            coeff = BiPoly.one(field)
        return cls(field, prec, {n: coeff})

    @classmethod
    def from_terms(cls, field, prec, terms):
        coeffs = {}
        for n, c in terms.items():
            if isinstance(c, int):
                c = BiPoly.scalar(field, c)
            coeffs[n] = c
        return cls(field, prec, coeffs)

    # -- inspection -----------------------------------------------------------

    def val(self):
        """u-adic valuation of the truncation; prec when nothing is stored."""
        return min(self.coeffs) if self.coeffs else self.prec

    @property
    def is_zero(self):
        return not self.coeffs

    def coefficient(self, n):
        if n >= self.prec:
            raise PrecisionError(f"coefficient of u^{n} not known at precision {self.prec}")
        return self.coeffs.get(n, BiPoly.zero(self.field))

    def t_degree(self):
        degs = [c.t_degree() for c in self.coeffs.values()]
        degs = [d for d in degs if d is not None]
        return max(degs, default=None)

    def __eq__(self, other):
        return (isinstance(other, USeries) and self.field == other.field
                and self.prec == other.prec and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.prec, frozenset((n, frozenset(c.terms.items()))
                                                      for n, c in self.coeffs.items())))

    def first_difference(self, other):
        """Smallest exponent (below both precisions) where the two disagree, or None."""
        _same_field(self, other)
        bound = min(self.prec, other.prec)
        exps = {n for n in self.coeffs if n < bound} | {n for n in other.coeffs if n < bound}
        for n in sorted(exps):
            if self.coeffs.get(n) != other.coeffs.get(n):
                return n
        return None

    def agrees_with(self, other):
        return self.first_difference(other) is None

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        _same_field(self, other)
        prec = min(self.prec, other.prec)
        out = {n: c for n, c in self.coeffs.items() if n < prec}
        for n, c in other.coeffs.items():
            if n >= prec:
                continue
            if n in out:
                s = out[n] + c
                if s.is_zero:
                    del out[n]
                else:
                    out[n] = s
            else:
                out[n] = c
        return USeries._raw(self.field, prec, out)

    def __neg__(self):
        return USeries._raw(self.field, self.prec,
                            {n: -c for n, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        _same_field(self, other)
        f = self.field
        prec = min(self.prec + other.val(), other.prec + self.val())
        if prec <= 0:
            raise PrecisionError("product precision underflow")
        add, mul = f.add_table, f.mul_table
        out = {}
        for n1, c1 in self.coeffs.items():
            items1 = list(c1.terms.items())
            for n2, c2 in other.coeffs.items():
                n = n1 + n2
                if n >= prec:
                    continue
                acc = out.get(n)
                if acc is None:
                    acc = out[n] = {}
                get = acc.get
                for (i1, j1), v1 in items1:
                    row = mul[v1]
                    for (i2, j2), v2 in c2.terms.items():
                        key = (i1 + i2, j1 + j2)
                        s = add[get(key, 0)][row[v2]]
                        if s:
                            acc[key] = s
                        elif key in acc:
                            del acc[key]
        coeffs = {n: BiPoly._raw(f, d) for n, d in out.items() if d}
        return USeries._raw(f, prec, coeffs)

    def scale(self, poly):
        """Multiply by a coefficient-ring element (precision unchanged)."""
        if isinstance(poly, int):
            poly = BiPoly.scalar(self.field, poly)
        out = {}
        for n, c in self.coeffs.items():
            s = c * poly
            if not s.is_zero:
                out[n] = s
        return USeries._raw(self.field, self.prec, out)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative series exponent")
        if k == 0:
            return USeries.one(self.field, self.prec)
        q = self.field.q
        v = 0
        while k % q == 0:
            k //= q
            v += 1
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result.frobenius(v) if v else result

    def inv(self):
        """Inverse of a series whose constant term is a nonzero F_q scalar."""
        f = self.field
        c0 = self.coeffs.get(0)
        if c0 is None or set(c0.terms) != {(0, 0)}:
            raise ValueError("inverse requires a unit scalar constant term")
        inv0 = f.inv(c0.terms[(0, 0)])
        a_items = sorted((n, c) for n, c in self.coeffs.items() if n > 0)
        b = {0: BiPoly.scalar(f, inv0)}
        neg_inv0 = f.neg(inv0)
        for n in range(1, self.prec):
            acc = None
            for k, ak in a_items:
                if k > n:
                    break
                bk = b.get(n - k)
                if bk is None:
                    continue
                term = ak * bk
                acc = term if acc is None else acc + term
            if acc is not None and not acc.is_zero:
                b[n] = acc.scale(neg_inv0)
        return USeries._raw(f, self.prec, {n: c for n, c in b.items() if not c.is_zero})

    # -- Frobenius-type maps ----------------------------------------------------

    def tau(self, k=1):
        """tau**k: theta -> theta**(q**k), u -> u**(q**k), t fixed."""
        if k < 0:
            raise ValueError("tau exponent must be >= 0")
        if k == 0:
            return self
        s = self.field.q ** k
        return USeries._raw(self.field, self.prec * s,
                            {n * s: c.tau_twist(k) for n, c in self.coeffs.items()})

    def frobenius(self, k=1):
        """self**(q**k), computed as exponent scaling (char p)."""
        if k < 0:
            raise ValueError("frobenius exponent must be >= 0")
        if k == 0:
            return self
        s = self.field.q ** k
        return USeries._raw(self.field, self.prec * s,
                            {n * s: c.frobenius(k) for n, c in self.coeffs.items()})

    def map_coefficients(self, fn):
        """Apply fn to every coefficient, dropping the ones that vanish."""
        return USeries(self.field, self.prec,
                       {n: fn(c) for n, c in self.coeffs.items()})

    def subs_t_theta(self):
        """Specialise t -> theta in every coefficient."""
        return self.map_coefficients(lambda c: c.subs_t_theta())

    # -- reshaping ----------------------------------------------------------------

    def truncate(self, prec):
        if prec <= 0:
            raise PrecisionError("cannot truncate to non-positive precision")
        if prec > self.prec:
            raise PrecisionError(
                f"cannot extend precision {self.prec} to {prec} by truncation")
        if prec == self.prec:
            return self
        return USeries._raw(self.field, prec,
                            {n: c for n, c in self.coeffs.items() if n < prec})

    def shift(self, m):
        """Multiply by u**m (m may be negative when the valuation allows it)."""
        if m < 0 and self.val() < -m:
            raise ValueError("negative shift below the u-adic valuation")
        prec = self.prec + m
        if prec <= 0:
            raise PrecisionError("shift precision underflow")
        return USeries._raw(self.field, prec,
                            {n + m: c for n, c in self.coeffs.items()})

    def __repr__(self):
        terms = ", ".join(f"u^{n}: {c!r}" for n, c in sorted(self.coeffs.items())[:6])
        return f"USeries(prec={self.prec}, {{{terms}}})"


class CarlitzOperator:
    """Twisted polynomial sum([a, i] * tau**i): the image of a in F_q[theta]{tau}
    under the rank-one module determined by theta -> theta + tau."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        if not coeffs:
            raise ValueError("zero twisted polynomial")
        self.field = field
        self.coeffs = tuple(coeffs)

    @property
    def tau_degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return (isinstance(other, CarlitzOperator) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def compose(self, other):
        """Twisted product: tau * c = c**q * tau."""
        f = self.field
        out = [UniPoly.zero(f) for _ in range(self.tau_degree + other.tau_degree + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero:
                    continue
                out[i + j] = out[i + j] + a * b.frobenius_twist(i)
        return CarlitzOperator(f, out)

    def __repr__(self):
        return f"CarlitzOperator({[p for p in self.coeffs]!r})"


def carlitz_phi(a):
    """Twisted-polynomial coefficients [a, 0], ..., [a, deg a] of phi_a."""
    if a.is_zero:
        raise ValueError("phi is only defined for nonzero ring elements")
    f = a.field
    phi_theta = CarlitzOperator(f, [UniPoly.gen(f), UniPoly.one(f)])
    # phi_{theta**k} by iterated composition, then F_q-linear combination
    power = CarlitzOperator(f, [UniPoly.one(f)])
    rows = []
    for k in range(len(a.coeffs)):
        rows.append(power)
        if k + 1 < len(a.coeffs):
            power = phi_theta.compose(power)
    out = [UniPoly.zero(f) for _ in range(a.degree + 1)]
    for k, ck in enumerate(a.coeffs):
        if ck:
            for i, coeff in enumerate(rows[k].coeffs):
                out[i] = out[i] + coeff.scale(ck)
    return CarlitzOperator(f, out)


def u_c_expansion(c, prec):
    """Expansion of u_c = 1 / phi_c(1/u) for monic c, modulo u**prec.

    With d = deg c this is u**(q**d) * inv(sum_i [c, i] u**(q**d - q**i));
    the leading term is u**(q**d) and all coefficients stay in F_q[theta].
    """
    if not c.is_monic:
        raise ValueError("u_c requires a monic polynomial")
    if prec <= 0:
        raise PrecisionError("u_c requires positive precision")
    field = c.field
    d = c.degree
    qd = field.q ** d
    if qd >= prec:
        return USeries.zero(field, prec)
    op = carlitz_phi(c)
    inner = USeries(field, prec - qd,
                    {qd - field.q ** i: op.coeffs[i].to_bipoly()
                     for i in range(d + 1)})
    return inner.inv().shift(qd)
