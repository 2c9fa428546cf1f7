"""Exact integer evaluation of the counting bounds.

Real-valued terms with fractional exponents are handled through integer roots:
ceil(x^(1/r)) for an integer x is the least m with m^r >= x.
"""
from __future__ import annotations

from .errors import InvalidArgument


def iroot_floor(x: int, r: int) -> int:
    """Largest m with m**r <= x."""
    if x < 0 or r < 1:
        raise InvalidArgument("iroot needs x >= 0 and r >= 1")
    if x < 2 or r == 1:
        return x
    m = 1 << -(-x.bit_length() // r)  # upper bound
    while True:
        nxt = ((r - 1) * m + x // m ** (r - 1)) // r
        if nxt >= m:
            break
        m = nxt
    while m ** r > x:
        m -= 1
    while (m + 1) ** r <= x:
        m += 1
    return m


def iroot_ceil(x: int, r: int) -> int:
    m = iroot_floor(x, r)
    return m if m ** r == x else m + 1


def _clique_terms(n: int, c: int):
    """(x1, r1), (x2, r2) with the two clique-bound terms equal to x^(1/r)."""
    # 3^((c-1)/3) n^2 = (3^(c-1) n^6)^(1/3)
    first = (3 ** (c - 1) * n ** 6, 3)
    # 4^((c+4)(c-1)/2) n^(2 - 2^(1-c)) = (2^((c+4)(c-1) 2^(c-1)) n^(2^c - 1))^(1/2^(c-1))
    r = 2 ** (c - 1)
    second = (2 ** ((c + 4) * (c - 1) * r) * n ** (2 ** c - 1), r)
    return first, second


def clique_bound_floor(n: int, c: int) -> int:
    """floor(min{3^((c-1)/3) n^2, 4^((c+4)(c-1)/2) n^(2-2^(1-c))}): a count is within the
    real-valued bound iff it is at most this."""
    _check(n, c)
    return min(iroot_floor(x, r) for x, r in _clique_terms(n, c))


def clique_bound_ceil(n: int, c: int) -> int:
    _check(n, c)
    return min(iroot_ceil(x, r) for x, r in _clique_terms(n, c))


def maximal_blowup_bound(n: int, k: int, c: int) -> int:
    """(n^max(c-1,1) + min{3^((c-1)/3) n^2, 4^((c+4)(c-1)/2) n^(2-2^(1-c))})^k,
    with the fractional term rounded up."""
    if k < 1:
        raise InvalidArgument("k must be at least 1")
    _check(n, c)
    return (n ** max(c - 1, 1) + clique_bound_ceil(n, c)) ** k


def star_bound(n: int, c: int) -> int:
    """3^c n^2 + n^c."""
    return 3 ** c * n * n + n ** c


def induced_polynomial_bound(n: int, k: int, c: int) -> int:
    """(2n)^k (n^2 2^c)^k."""
    return (2 * n) ** k * (n * n * 2 ** c) ** k


def transversal_lower_bound(K: int, k: int) -> int:
    """ceil((2^K - 2) / 2^(2k))."""
    return -(-(2 ** K - 2) // 2 ** (2 * k))


def _check(n, c):
    if n < 0:
        raise InvalidArgument("n must be nonnegative")
    if c < 1:
        raise InvalidArgument("c must be at least 1")
