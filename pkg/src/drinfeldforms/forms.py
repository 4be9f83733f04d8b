"""Truncated u-expansions of the classical forms and their t-deformations.

FormCatalog fixes a field F_q and a working precision and caches:

  g       weight q-1 form,  1 - (theta**q - theta) * sum u_c**(q-1)
  h       weight q+1 form,  sum c**q u_c = u + ...
  delta   discriminant,     -h**(q-1)
  e       false Eisenstein, sum c u_c
  d2      the unit-root deformation: the unique series with constant
          term 1 solving X = g X^(1) + delta (t - theta**q) X^(2)
  ee      deformation of e with expansion sum chi_t(c) u_c

plus the families f_{l,nu} = sum c**(l q**nu) u_c**l (1 <= l <= q) and
f_s = sum c**(1 + s(q-1)) u_c.  Each sum runs over the monic c whose
term valuation stays below the precision, so truncations are exact.

All comparisons are reported with the first differing u-exponent, never
asserted, so the same machinery drives both the verified identities and
the open-ended experiments.
"""

from .errors import PrecisionError, ResourceLimitError
from .polynomials import BiPoly, enumerate_monic
from .series import USeries, u_c_expansion

# Empirically fixed sign s in ee = s * h * tau(d2).  The A-expansion
# sum chi_t(c) u_c is the ground truth; a test pins this constant.
EE_FROM_H_TAU_D2_SIGN = 1


def t_minus_theta_pow(field, k):
    """The coefficient t - theta**k."""
    return BiPoly.from_pairs(field, [((0, 1), 1), ((k, 0), field.neg(1))])


def bracket_twisted(field, n, twist=0):
    """(theta**(q**n) - theta)**(q**twist); zero when n == 0."""
    q = field.q
    return BiPoly.from_pairs(field, [((q ** (n + twist), 0), 1),
                                     ((q ** twist, 0), field.neg(1))])


def compare_series(lhs, rhs):
    """Equality report for two series, to the shared provable precision."""
    diff = lhs.first_difference(rhs)
    return {
        "equal": diff is None,
        "first_difference": diff,
        "compared_precision": min(lhs.prec, rhs.prec),
    }


class FormCatalog:
    """Shared cache of u-expansions over one field at one precision."""

    def __init__(self, field, prec):
        if prec < 1:
            raise PrecisionError("catalog precision must be >= 1")
        self.field = field
        self.prec = int(prec)
        self._monic = {}
        self._uc_pow = {}
        self._cache = {}

    # -- summation helpers -----------------------------------------------------

    def monic(self, d):
        if d not in self._monic:
            self._monic[d] = enumerate_monic(self.field, d)
        return self._monic[d]

    def summation_degrees(self, weight):
        """Degrees d with weight * q**d < prec: exactly the terms that matter."""
        out, d = [], 0
        while weight * self.field.q ** d < self.prec:
            out.append(d)
            d += 1
        return out

    def u_c(self, c, power=1):
        key = (c.coeffs, power)
        cached = self._uc_pow.get(key)
        if cached is None:
            if power == 1:
                cached = u_c_expansion(c, self.prec)
            else:
                cached = (self.u_c(c) ** power).truncate(self.prec)
            self._uc_pow[key] = cached
        return cached

    def a_expansion(self, power, coefficient_of):
        """sum over monic c of coefficient_of(c) * u_c**power, modulo u**prec."""
        total = USeries.zero(self.field, self.prec)
        for d in self.summation_degrees(power):
            for c in self.monic(d):
                total = total + self.u_c(c, power).scale(coefficient_of(c))
        return total

    # -- the catalog -------------------------------------------------------------

    def _cached(self, name, build):
        if name not in self._cache:
            self._cache[name] = build()
        return self._cache[name]

    @property
    def g(self):
        def build():
            q = self.field.q
            s = self.a_expansion(q - 1, lambda c: BiPoly.one(self.field))
            thq_minus_th = BiPoly.from_pairs(
                self.field, [((q, 0), 1), ((1, 0), self.field.neg(1))])
            return USeries.one(self.field, self.prec) - s.scale(thq_minus_th)
        return self._cached("g", build)

    @property
    def h(self):
        q = self.field.q
        return self._cached(
            "h", lambda: self.a_expansion(1, lambda c: (c ** q).to_bipoly()))

    @property
    def delta(self):
        q = self.field.q
        return self._cached(
            "delta", lambda: (-(self.h ** (q - 1))).truncate(self.prec))

    @property
    def e(self):
        """Gekeler's false Eisenstein series sum c u_c."""
        return self._cached("e", lambda: self.a_expansion(1, lambda c: c.to_bipoly()))

    @property
    def ee(self):
        """The t-deformation sum chi_t(c) u_c."""
        return self._cached("ee", lambda: self.a_expansion(1, lambda c: c.chi_t()))

    @property
    def d2(self):
        return self._cached("d2", self._d2_fixed_point)

    def _d2_fixed_point(self):
        """Iterate X -> g X^(1) + delta (t - theta**q) X^(2) from X = 1.

        Each pass at least multiplies the valuation of the correction by
        q, so stabilisation within the budget is guaranteed; running out
        of budget would mean the arithmetic itself is broken.
        """
        field, prec, q = self.field, self.prec, self.field.q
        scaled_delta = self.delta.scale(t_minus_theta_pow(field, q))
        budget, reach = 4, q - 1
        while reach < prec:
            reach *= q
            budget += 1
        x = USeries.one(field, prec)
        for _ in range(budget):
            t1 = x.tau(1).truncate(prec)
            t2 = x.tau(2).truncate(prec)
            nxt = self.g * t1 + scaled_delta * t2
            nxt = nxt.truncate(prec)
            if nxt == x:
                return x
            x = nxt
        raise ResourceLimitError("fixed-point iteration failed to stabilise")

    # -- A-expansion families ------------------------------------------------------

    def f_l_nu(self, l, nu):
        """f_{l, nu} = sum c**(l q**nu) u_c**l for 1 <= l <= q, nu >= 0."""
        q = self.field.q
        if not 1 <= l <= q:
            raise ValueError(f"l must satisfy 1 <= l <= q, got {l}")
        if nu < 0:
            raise ValueError("nu must be >= 0")
        exp = l * q ** nu
        return self._cached(
            ("f", l, nu),
            lambda: self.a_expansion(l, lambda c: (c ** exp).to_bipoly()))

    def f_s(self, s):
        """f_s = sum c**(1 + s(q-1)) u_c for s >= 1."""
        if s < 1:
            raise ValueError("s must be >= 1")
        exp = 1 + s * (self.field.q - 1)
        return self._cached(
            ("fs", s),
            lambda: self.a_expansion(1, lambda c: (c ** exp).to_bipoly()))

    # -- identity reports ------------------------------------------------------------

    def check_ee_power(self, l):
        """Compare ee**l with sum chi_t(c)**l u_c**l; equality is a theorem
        only for 1 <= l <= q, so callers beyond that range get a report."""
        if l < 1:
            raise ValueError("l must be >= 1")
        lhs = (self.ee ** l).truncate(self.prec)
        rhs = self.a_expansion(l, lambda c: c.chi_t() ** l)
        report = compare_series(lhs, rhs)
        report.update({"identity": "e-power", "l": l, "q": self.field.q})
        return report

    def check_f_power(self, l, nu):
        """Compare f_{1, nu}**l with f_{l, nu} (a theorem for 1 <= l <= q)."""
        q = self.field.q
        if not 1 <= l <= q:
            raise ValueError(f"l must satisfy 1 <= l <= q, got {l}")
        if nu < 1:
            raise ValueError("nu must be >= 1")
        lhs = (self.f_l_nu(1, nu) ** l).truncate(self.prec)
        report = compare_series(lhs, self.f_l_nu(l, nu))
        report.update({"identity": "f-power", "l": l, "nu": nu, "q": q})
        return report

    def divide_by_h_power(self, x, k):
        """Exact division by h**k via h = u * unit; raises if not divisible."""
        unit = self.h.shift(-1)
        return (x * (unit.inv() ** k)).shift(-k)

    def resolve_recursive(self, nu):
        """Test the candidate recursions
            ( g**q f_{i, nu-1}**q - B f_{i, nu-2}**(q*q) ) / h**(q-1)
        against the directly summed f_{1, nu}, for inner index i in {1, 2}
        and bracket B among the Frobenius twists of theta**(q**(nu-2)) - theta.
        """
        if nu < 2:
            raise ValueError("nu must be >= 2")
        field, q = self.field, self.field.q
        oracle = self.f_l_nu(1, nu)
        gq = (self.g ** q).truncate(self.prec)
        candidates = []
        for inner in (1, 2):
            fa = (self.f_l_nu(inner, nu - 1) ** q).truncate(self.prec)
            fb = (self.f_l_nu(inner, nu - 2) ** (q * q)).truncate(self.prec)
            for twist in (2, 1, 0):
                bracket = bracket_twisted(field, nu - 2, twist)
                entry = {"inner": inner, "bracket_index": nu - 2,
                         "bracket_twist": twist}
                try:
                    rhs = self.divide_by_h_power(gq * fa - fb.scale(bracket), q - 1)
                except (ValueError, PrecisionError) as exc:
                    entry.update({"equal": False, "first_difference": None,
                                  "division_error": str(exc)})
                else:
                    entry.update(compare_series(rhs, oracle))
                candidates.append(entry)
        matching = [i for i, c in enumerate(candidates) if c["equal"]]
        return {"identity": "resolve-recursive", "nu": nu, "q": q,
                "prec": self.prec, "candidates": candidates, "matching": matching}

    def conjecture_fs(self, s):
        """Compare f_s * d2 with sum chi_t(c) c**(s(q-1)) u_c (report only)."""
        if s < 1:
            raise ValueError("s must be >= 1")
        exp = s * (self.field.q - 1)
        lhs = (self.f_s(s) * self.d2).truncate(self.prec)
        rhs = self.a_expansion(
            1, lambda c: c.chi_t() * (c ** exp).to_bipoly())
        report = compare_series(lhs, rhs)
        report.update({"identity": "conjecture-fs", "s": s, "q": self.field.q})
        return report


# -- standalone constructors ----------------------------------------------------

def eisenstein_g(field, prec):
    return FormCatalog(field, prec).g


def eisenstein_h(field, prec):
    return FormCatalog(field, prec).h


def delta(field, prec):
    return FormCatalog(field, prec).delta


def false_eisenstein(field, prec):
    return FormCatalog(field, prec).e


def ee_series(field, prec):
    return FormCatalog(field, prec).ee


def d2_fixed_point(field, prec):
    return FormCatalog(field, prec).d2
