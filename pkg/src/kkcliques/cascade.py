"""Exact binomial arithmetic and cascade (combinatorial) representations.

Every m >= 0 has a unique greedy expansion at level s >= 1,

    m = C(a_s, s) + C(a_{s-1}, s-1) + ... + C(a_{s-l+1}, s-l+1),

with a_s > a_{s-1} > ... and the bottom index at least its level.  Evaluating
the same entries one row up or down the triangle gives the t-clique count and
q-shadow size of the colex initial segment with m edges (Kruskal-Katona), so
this module is the numeric core everything else leans on.

Usage:
    >>> cascade_of(7, 3)
    Cascade(level=3, entries=(4, 3))
    >>> k_colex(7, 3, 4), shadow_colex(7, 3, 2)
    (2, 9)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Union

from .errors import InternalCheckError

Real = Union[int, float, Fraction]

_FACT = tuple(math.factorial(k) for k in range(32))


def binom_exact(n: int, k: int) -> int:
    """C(n, k) as an exact integer, 0 whenever k < 0 or n < k."""
    if k < 0 or n < k:
        return 0
    return comb(n, k)


def falling_factorial(x: Real, k: int) -> Real:
    """x(x-1)...(x-k+1); preserves int/Fraction/float type of x."""
    if k < 0:
        raise ValueError(f"falling_factorial needs k >= 0, got {k}")
    out: Real = 1
    for j in range(k):
        out = out * (x - j)
    return out


def binom_real(x: Real, k: int) -> Real:
    """Generalized binomial C(x, k) = x(x-1)...(x-k+1)/k! for real x.

    Exact (int or Fraction) when x is int or Fraction; float for float x.
    Negative k gives 0, matching binom_exact.
    """
    if k < 0:
        return 0
    num = falling_factorial(x, k)
    fact = _FACT[k] if k < len(_FACT) else math.factorial(k)
    if isinstance(num, float):
        return num / fact
    q = Fraction(num, fact)
    return int(q) if q.denominator == 1 else q


def _nth_root_floor(m: int, k: int) -> int:
    # Integer Newton iteration; exact for arbitrarily large m.
    if m < 0:
        raise ValueError("negative radicand")
    if m == 0:
        return 0
    x = 1 << ((m.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + m // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def binom_inverse(m: Real, k: int) -> Real:
    """The unique x >= k-1 with C(x, k) = m, for m >= 0 and k >= 1.

    Returns an exact int when m is a binomial coefficient C(r, k); otherwise
    a float root found by bisection (relative tolerance 1e-12).  C(x, k) is
    strictly increasing for x >= k-1 with C(k-1, k) = 0, so the root exists
    and is unique for every m >= 0.
    """
    if k < 1:
        raise ValueError(f"binom_inverse needs k >= 1, got {k}")
    if m < 0:
        raise ValueError(f"binom_inverse needs m >= 0, got {m}")
    if m == 0:
        return k - 1
    # Integer preimage first: land exactly on r when C(r, k) == m.
    m_int: Union[int, None] = None
    if isinstance(m, int):
        m_int = m
    elif isinstance(m, Fraction) and m.denominator == 1:
        m_int = int(m)
    elif isinstance(m, float) and m.is_integer():
        m_int = int(m)
    if m_int is not None:
        r = _binom_floor_index(m_int, k)
        if comb(r, k) == m_int:
            return r
        lo, hi = float(r), float(r + 1)
    else:
        mf = float(m)
        r = _binom_floor_index(int(mf) + 1, k)
        lo, hi = float(k - 1), float(r + 1)
    target = float(m)
    while hi - lo > 1e-12 * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if binom_real(mid, k) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _binom_floor_index(m: int, k: int) -> int:
    """Largest a with C(a, k) <= m, for m >= 1 (so a >= k)."""
    if k == 1:
        return m
    if k == 2:
        a = (isqrt(8 * m + 1) + 1) >> 1
        if a * (a - 1) // 2 > m:
            a -= 1
        return a
    fact = _FACT[k] if k < len(_FACT) else math.factorial(k)
    prod = m * fact
    if prod.bit_length() < 900:
        a = int(prod ** (1.0 / k) + (k - 1) * 0.5)
    else:
        a = _nth_root_floor(prod, k) + (k - 1) // 2
    if a < k:
        a = k
    while comb(a + 1, k) <= m:
        a += 1
    while comb(a, k) > m:
        a -= 1
    return a


@dataclass(frozen=True)
class Cascade:
    """Greedy expansion of an integer at a fixed level.

    entries[j] is the index of the binomial read at level ``level - j``;
    entries are strictly decreasing and the bottom entry is at least its
    level (which forces the same for every entry above it).
    """

    level: int
    entries: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.entries)

    def value(self) -> int:
        return cascade_eval(self, self.level)

    def is_strict(self) -> bool:
        """Strictly decreasing entries, each at least its own level."""
        ent, s = self.entries, self.level
        if len(ent) > s:
            return False
        for j, e in enumerate(ent):
            if j and ent[j - 1] <= e:
                return False
            if e < s - j:
                return False
        return True


def cascade_of(m: int, s: int) -> Cascade:
    """Unique strict s-cascade of m (greedy: take the largest C(a, level) <= rest).

    O(length) binomial evaluations after an analytic first guess per level.
    """
    if s < 1:
        raise ValueError(f"cascade level must be >= 1, got {s}")
    if m < 0:
        raise ValueError(f"cascade_of needs m >= 0, got {m}")
    entries = []
    rem = m
    lvl = s
    while rem > 0:
        if lvl == 1:
            entries.append(rem)
            break
        if lvl == 2:
            a = (isqrt(8 * rem + 1) + 1) >> 1
            if a * (a - 1) // 2 > rem:
                a -= 1
            entries.append(a)
            rem -= a * (a - 1) // 2
            lvl = 1
            continue
        prod = rem * _FACT[lvl] if lvl < len(_FACT) else rem * math.factorial(lvl)
        if prod.bit_length() < 900:
            a = int(prod ** (1.0 / lvl) + (lvl - 1) * 0.5)
        else:
            a = _nth_root_floor(prod, lvl) + (lvl - 1) // 2
        if a < lvl:
            a = lvl
        while comb(a + 1, lvl) <= rem:
            a += 1
        while comb(a, lvl) > rem:
            a -= 1
        entries.append(a)
        rem -= comb(a, lvl)
        lvl -= 1
    return Cascade(level=s, entries=tuple(entries))


def cascade_eval(cascade: Cascade, level: int) -> int:
    """Evaluate the cascade's entries at another level: sum of C(entry, level - j).

    Out-of-range binomials contribute 0 (and C(e, 0) = 1), so this is total
    in level >= 0.
    """
    if level < 0:
        raise ValueError(f"evaluation level must be >= 0, got {level}")
    total = 0
    lvl = level
    for e in cascade.entries:
        if lvl < 0:
            break
        if lvl <= e:
            total += comb(e, lvl)
        lvl -= 1
    return total


def k_colex(m: int, s: int, t: int) -> int:
    """t-clique count of the colex segment with m edges at arity s (t >= s).

    By Kruskal-Katona this is the maximum of k^t over all m-edge s-graphs.
    k_colex(m, s, s) = m by convention.
    """
    if not 1 <= s <= t:
        raise ValueError(f"need 1 <= s <= t, got s={s}, t={t}")
    return cascade_eval(cascade_of(m, s), t)


def shadow_colex(m: int, s: int, q: int) -> int:
    """q-shadow size of the colex segment with m edges at arity s (0 <= q < s).

    By Kruskal-Katona this is the minimum of |shadow_q| over m-edge s-graphs.
    """
    if not 0 <= q < s:
        raise ValueError(f"need 0 <= q < s, got q={q}, s={s}")
    return cascade_eval(cascade_of(m, s), q)


def complement_cascade(m: int, s: int, n: int) -> Cascade:
    """(n-s)-cascade of C(n, s) - m, built from the s-cascade of m directly.

    The two cascades share their bottom entry b, and their remaining entries
    partition {b+1, ..., n-1}; in particular the lengths sum to n - b + 1.
    Cross-checked against the greedy expansion of C(n, s) - m; a mismatch
    raises InternalCheckError.
    """
    if not 1 <= s < n:
        raise ValueError(f"need 1 <= s < n, got s={s}, n={n}")
    if not 0 <= m <= comb(n, s):
        raise ValueError(f"need 0 <= m <= C(n, s) = {comb(n, s)}, got m={m}")
    if m == comb(n, s):
        out = Cascade(level=n - s, entries=())
    elif m == 0:
        out = Cascade(level=n - s, entries=(n,))
    else:
        ent = cascade_of(m, s).entries
        b = ent[-1]
        upper = set(ent[:-1])
        co = [x for x in range(n - 1, b, -1) if x not in upper]
        co.append(b)
        out = Cascade(level=n - s, entries=tuple(co))
    direct = cascade_of(comb(n, s) - m, n - s)
    if out != direct:
        raise InternalCheckError(
            f"complement cascade mismatch for m={m}, s={s}, n={n}: "
            f"{out} vs greedy {direct}"
        )
    return out


def k_via_complement(m: int, s: int, t: int, n: int) -> int:
    """k_colex(m, s, t) computed through the complement identity on [n]:

        k = C(n, t) - shadow_{n-t} of the colex (n-s)-segment with C(n,s) - m edges.

    Requires 0 <= s <= t <= n and 0 <= m <= C(n, s).
    """
    if not 0 <= s <= t <= n:
        raise ValueError(f"need 0 <= s <= t <= n, got s={s}, t={t}, n={n}")
    if not 0 <= m <= comb(n, s):
        raise ValueError(f"need 0 <= m <= C(n, s) = {comb(n, s)}, got m={m}")
    if s == n:
        # t = n as well; the only s-set is [n] itself.
        return m
    co = cascade_of(comb(n, s) - m, n - s)
    return comb(n, t) - cascade_eval(co, n - t)


def lovasz_clique_bound(m: int, s: int, t: int) -> Real:
    """Lovasz-form Kruskal-Katona bound: C(x, t) where C(x, s) = m exactly.

    Zero when x < t.  Always >= k_colex(m, s, t); exact integer (and equal
    to k_colex) when x is an integer.
    """
    if not 1 <= s <= t:
        raise ValueError(f"need 1 <= s <= t, got s={s}, t={t}")
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    x = binom_inverse(m, s)
    if x < t:
        return 0
    return binom_real(x, t)
