"""Arithmetic in small finite fields F_q, q = p**e.

Elements are plain ints in range(q) encoding little-endian base-p digit
vectors: the int sum(c_i * p**i) stands for the residue class
sum(c_i * x**i) modulo the defining polynomial.  With this encoding 0
and 1 are always the additive and multiplicative identities, integer
scalars k embed as k % p, and the natural int order is a canonical
enumeration of the field.  All arithmetic is table-driven (Zech
logarithms fill the multiplication table), so the polynomial and series
layers above can run on flat dicts of ints.

The defining polynomial defaults to the first monic irreducible of
degree e in increasing integer encoding; construction always verifies
irreducibility (no roots in F_p, plus trial division by every monic
polynomial of degree <= e // 2).
"""

from functools import lru_cache
from itertools import product


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- polynomial helpers over F_p on little-endian coefficient tuples --------

def _fp_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _fp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = (out[i + j] + ca * cb) % p
    return _fp_trim(out)


def _fp_mod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, cm in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * cm) % p
        a.pop()
    return _fp_trim(a)


def _fp_is_irreducible(m, p):
    e = len(m) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    # no roots in F_p
    for x in range(p):
        acc = 0
        for c in reversed(m):
            acc = (acc * x + c) % p
        if acc == 0:
            return False
    # trial division by every monic polynomial of degree 2 .. e // 2
    for d in range(2, e // 2 + 1):
        for lows in product(range(p), repeat=d):
            if not _fp_mod(m, lows + (1,), p):
                return False
    return True


@lru_cache(maxsize=None)
def canonical_modulus(p, e):
    """First monic irreducible of degree e over F_p, in integer-encoding order."""
    for k in range(p ** e):
        lows = []
        v = k
        for _ in range(e):
            lows.append(v % p)
            v //= p
        m = tuple(lows) + (1,)
        if _fp_is_irreducible(m, p):
            return m
    raise ValueError(f"no irreducible polynomial of degree {e} over F_{p}")


class FiniteField:
    """The field F_q, q = p**e, with elements encoded as ints in range(q)."""

    def __init__(self, p, e=1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = canonical_modulus(p, e)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree e")
        if not _fp_is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus
        self._tables = None

    # -- table construction --------------------------------------------------

    def _digits_of(self, a):
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _raw_mul(self, a, b):
        prod_ = _fp_mul(self._digits_of(a), self._digits_of(b), self.p)
        red = _fp_mod(prod_, self.modulus, self.p)
        return sum(c * self.p ** i for i, c in enumerate(red))

    def _build_tables(self):
        p, q = self.p, self.q
        digits = [self._digits_of(a) for a in range(q)]
        add = [[0] * q for _ in range(q)]
        for a in range(q):
            da = digits[a]
            row = add[a]
            for b in range(a, q):
                db = digits[b]
                s = 0
                for i in range(self.e):
                    s += ((da[i] + db[i]) % p) * p ** i
                row[b] = s
                add[b][a] = s
        neg = [0] * q
        for a in range(q):
            neg[a] = sum(((-d) % p) * p ** i for i, d in enumerate(digits[a]))
        # multiplicative group via a generator (Zech-style exp/log)
        gen = None
        for g in range(1, q):
            x, order = g, 1
            while x != 1:
                x = self._raw_mul(x, g)
                order += 1
            if order == q - 1:
                gen = g
                break
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._raw_mul(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        mul = [[0] * q for _ in range(q)]
        for a in range(1, q):
            la = log[a]
            row = mul[a]
            for b in range(1, q):
                row[b] = exp[(la + log[b]) % (q - 1)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = exp[(q - 1 - log[a]) % (q - 1)]
        self._tables = (add, mul, neg, inv, exp, log)

    def _get_tables(self):
        if self._tables is None:
            self._build_tables()
        return self._tables

    @property
    def add_table(self):
        return self._get_tables()[0]

    @property
    def mul_table(self):
        return self._get_tables()[1]

    @property
    def neg_table(self):
        return self._get_tables()[2]

    @property
    def inv_table(self):
        return self._get_tables()[3]

    # -- element operations --------------------------------------------------

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.inv_table[a]

    def pow(self, a, k):
        add, mul, neg, inv, exp, log = self._get_tables()
        if a == 0:
            if k > 0:
                return 0
            if k == 0:
                return 1
            raise ZeroDivisionError("negative power of zero field element")
        return exp[(log[a] * k) % (self.q - 1)]

    def scalar(self, k):
        """Embed the integer k via the prime subfield."""
        return k % self.p

    def elements(self):
        return range(self.q)

    def digits(self, a):
        """Little-endian base-p digit vector of an element."""
        if not 0 <= a < self.q:
            raise ValueError("element out of range")
        return self._digits_of(a)

    def from_digits(self, digits):
        if len(digits) != self.e:
            raise ValueError("digit vector has wrong length")
        return sum((int(d) % self.p) * self.p ** i for i, d in enumerate(digits))

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.e}"


@lru_cache(maxsize=None)
def _cached_field(p, e, modulus):
    return FiniteField(p, e, modulus)


def finite_field(p, e=1, modulus=None):
    """Interned constructor for F_{p**e}; equal parameters share one instance."""
    if modulus is None:
        modulus = canonical_modulus(p, e)
    return _cached_field(p, e, tuple(int(c) % p for c in modulus))


@lru_cache(maxsize=None)
def _extension_data(p, e, modulus, m):
    base = _cached_field(p, e, modulus)
    ext = finite_field(p, e * m)
    # smallest root of the base modulus inside the big field
    root = None
    for x in ext.elements():
        acc = 0
        for c in reversed(base.modulus):
            acc = ext.add(ext.mul(acc, x), ext.scalar(c))
        if acc == 0:
            root = x
            break
    if root is None:
        raise RuntimeError("base modulus has no root in the extension")
    embed = []
    for a in base.elements():
        img, xp = 0, 1
        for d in base.digits(a):
            img = ext.add(img, ext.mul(ext.scalar(d), xp))
            xp = ext.mul(xp, root)
        embed.append(img)
    return ext, tuple(embed)


def extension_field(base, m):
    """Return (F_{q**m}, embedding table) for a degree-m extension of base.

    The embedding table maps each base element (as int) to its image in
    the extension, through the smallest root of the base modulus.
    """
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    return _extension_data(base.p, base.e, base.modulus, m)
