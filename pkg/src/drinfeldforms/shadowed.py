"""Index-shadowed partitions and the closed-form approximations of d2.

An order-r shadowed partition of n is a tuple (S_1, ..., S_r) of subsets
of {0, ..., n-1} whose shifted copies S_i + j (0 <= j < i) tile
{0, ..., n-1}: an element of S_i is the left endpoint of a length-i
tile.  For r = 2 the count is the Fibonacci-style square/domino number.

Evaluating one product per tile pattern,

    G_k = - sum over (S_1, S_2) of
            prod_{j in S_1} g**(q**j) *
            prod_{i in S_2} (t - theta**(q**(i+1))) delta**(q**i),

gives a non-recursive construction whose negative agrees with d2 modulo
u**(q**(k-1) (q-1)), which check_d2_approx certifies against the
fixed-point construction.
"""

from .errors import PrecisionError
from .forms import t_minus_theta_pow
from .series import USeries


def enumerate_shadowed(r, n):
    """All order-r shadowed partitions of n, sorted by their block tuples."""
    if r < 1:
        raise ValueError("order must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    results = []
    blocks = [[] for _ in range(r)]

    def place(pos):
        if pos == n:
            results.append(tuple(frozenset(b) for b in blocks))
            return
        for size in range(1, r + 1):
            if pos + size <= n:
                blocks[size - 1].append(pos)
                place(pos + size)
                blocks[size - 1].pop()

    place(0)
    results.sort(key=lambda parts: tuple(tuple(sorted(s)) for s in parts))
    return results


def is_shadowed_partition(parts, n):
    """Check the defining tiling property of a candidate tuple."""
    covered = set()
    for i, block in enumerate(parts, start=1):
        for s in block:
            for j in range(i):
                x = s + j
                if x < 0 or x >= n or x in covered:
                    return False
                covered.add(x)
    return len(covered) == n


def g1k_shadowed(catalog, k):
    """The closed-form sequence entry G_k built from order-2 partitions.

    G_0 = -1 (empty tiling), G_1 = -g, G_2 = -g**(q+1) - (t - theta**q) delta.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    field, prec, q = catalog.field, catalog.prec, catalog.field.q
    total = USeries.zero(field, prec)
    for s1, s2 in enumerate_shadowed(2, k):
        term = USeries.one(field, prec)
        for j in sorted(s1):
            term = (term * catalog.g.frobenius(j)).truncate(prec)
        for i in sorted(s2):
            term = (term * catalog.delta.frobenius(i)).truncate(prec)
            term = term.scale(t_minus_theta_pow(field, q ** (i + 1)))
        total = total + term
    return -total


def d2_shadowed(catalog, k):
    """The order-k closed-form approximation of d2 (equals -G_k)."""
    return -g1k_shadowed(catalog, k)


def check_d2_approx(catalog, k):
    """Certify that d2 + G_k has u-adic valuation >= q**(k-1) (q-1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    q = catalog.field.q
    bound = q ** (k - 1) * (q - 1)
    if catalog.prec <= bound:
        raise PrecisionError(
            f"precision {catalog.prec} cannot certify valuation >= {bound}")
    difference = catalog.d2 + g1k_shadowed(catalog, k)
    val = difference.val()
    return {
        "identity": "d2-approx",
        "k": k,
        "q": q,
        "prec": catalog.prec,
        "required_valuation": bound,
        "observed_valuation": val,
        "difference_vanishes_to_precision": difference.is_zero,
        "ok": val >= bound,
    }
