"""Signpost upper bounds on clique counts of bounded-degree uniform hypergraphs.

Three bounds, each exact rational arithmetic wherever the degree parameter has
the block form C(x-i, s-i) for integer x:

  * vertex_bound  -- n vertices, max i-degree Delta;
  * edge_bound    -- m edges, max i-degree Delta;
  * clique_bound  -- p u-cliques, max i-degree Delta (u = s reduces to edge_bound);

plus the 2-graph specialization graph_clique_bound, the per-neighborhood
clique/edge ratio, and a scanner for the ratio-maximality condition on
k_colex(m,s,t)/m.

Each bound returns a BoundReport carrying the exact value, its floor (the
operative integer bound), and a tri-state equality_possible verdict with the
reasons recorded in notes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb
from typing import Optional, Union

from .cascade import binom_inverse, binom_real, falling_factorial, k_colex
from .errors import InternalCheckError

Real = Union[int, float, Fraction]

# Floor guard for the (irrational-x) float path: the true bound can sit within
# one ulp of an integer, and flooring an under-rounded float would understate it.
_FLOAT_FLOOR_EPS = 1e-9


@dataclass(frozen=True)
class BoundReport:
    """A certified upper bound on a t-clique count.

    value is exact (int or Fraction) whenever the degree parameter has integer
    block form; float otherwise.  integer_value = floor(value) is the operative
    bound, since clique counts are integers.  equality_possible is "yes" when a
    witness construction exists, "no" when the extremal characterisation rules
    it out, "unknown" otherwise (non-integral x, or the open s = i+1 cases).
    """

    value: Real
    integer_value: int
    source: str
    x: Optional[Real]
    equality_possible: str
    notes: tuple[str, ...] = ()


def _floor(value: Real) -> int:
    if isinstance(value, float):
        return math.floor(value + _FLOAT_FLOOR_EPS)
    return math.floor(value)


def _ratio(num: int, den: int) -> Real:
    q = Fraction(num, den)
    return int(q) if q.denominator == 1 else q


def _is_integral(value: Real) -> bool:
    if isinstance(value, int):
        return True
    if isinstance(value, Fraction):
        return value.denominator == 1
    return False


def _steiner_divides(i: int, r: int, n: int) -> bool:
    # Necessary divisibility conditions: (r-j)_(i-j) | (n-j)_(i-j), 0 <= j < i.
    for j in range(i):
        d = falling_factorial(r - j, i - j)
        if falling_factorial(n - j, i - j) % d:
            return False
    return True


def _steiner_existence(i: int, r: int, n: int) -> str:
    """"yes" / "no" / "unknown" for existence of S(i, r, n).

    Decidable cases: r = n (single block), i = 1 (r | n), and the classical
    families S(2,3,n), S(2,4,n), S(3,4,n) where the divisibility conditions
    are known to be sufficient.  Divisibility failure is always "no".
    """
    if r > n:
        return "no"
    if r == n:
        return "yes"
    if i == 1:
        return "yes" if n % r == 0 else "no"
    if not _steiner_divides(i, r, n):
        return "no"
    if (i, r) in {(2, 3), (2, 4), (3, 4)}:
        # Divisibility is sufficient for these block sizes (classical
        # triple/quadruple system existence results).
        return "yes"
    return "unknown"


def vertex_bound(n: int, i: int, s: int, t: int, delta: int) -> BoundReport:
    """k^t <= C(n,i) * k_colex(Delta, s-i, t-i) / C(t,i) for n-vertex s-graphs
    with max i-degree at most Delta.

    Primary form is the exact cascade expression; when Delta = C(x-i, s-i) the
    real form C(n,i)C(x-i,t-i)/C(t,i) is computed as a cross-check (equal at
    integer x, dominating otherwise).
    """
    if not 1 <= i < s <= t:
        raise ValueError(f"need 1 <= i < s <= t, got i={i}, s={s}, t={t}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if delta < 0:
        raise ValueError(f"need Delta >= 0, got {delta}")

    kc = k_colex(delta, s - i, t - i)
    value = _ratio(comb(n, i) * kc, comb(t, i)) if n >= i else 0
    x = i + binom_inverse(delta, s - i) if delta > 0 else None

    # Real-form cross-check (Lovasz dominance; equality at integer x).
    if x is not None:
        if isinstance(x, int):
            alt = _ratio(comb(n, i) * (comb(x - i, t - i) if x >= t else 0), comb(t, i)) if n >= i else 0
            if alt != value:
                raise InternalCheckError(
                    f"vertex bound forms disagree at integer x={x}: cascade {value} vs real {alt}"
                )
        else:
            alt = 0.0 if x < t else comb(n, i) * binom_real(x - i, t - i) / comb(t, i)
            if alt + 1e-6 * max(1.0, alt) < float(value):
                raise InternalCheckError(
                    f"real vertex-bound form {alt} fell below the exact cascade form {value}"
                )

    notes: list[str] = []
    if value == 0:
        eq = "yes"
        notes.append("bound is zero; the empty family attains it")
    elif n < t:
        eq = "no"
        notes.append(f"no {t}-clique fits in {n} vertices, so the bound cannot be met")
    elif not _is_integral(value):
        eq = "no"
        notes.append("bound is not an integer")
    elif not isinstance(x, int):
        eq = "unknown"
        notes.append(
            "degree parameter is not C(x-i, s-i) for integer x; tightness is open"
        )
    else:
        r = x
        exist = _steiner_existence(i, r, n)
        if exist == "yes":
            eq = "yes"
            notes.append(f"the s-shadow of a Steiner system S({i},{r},{n}) attains the bound")
        elif exist == "no":
            if s >= i + 2:
                eq = "no"
                notes.append(
                    f"no S({i},{r},{n}) exists, and for s >= i+2 only Steiner shadows attain the bound"
                )
            else:
                eq = "unknown"
                notes.append(
                    f"no S({i},{r},{n}) exists, but at s = i+1 non-Steiner extremal families are not ruled out"
                )
        else:
            eq = "unknown"
            notes.append(
                f"divisibility conditions for S({i},{r},{n}) hold but existence is not decided here"
            )
    return BoundReport(value, _floor(value), "vertex", x, eq, tuple(notes))


def edge_bound(m: int, i: int, s: int, t: int, delta: int) -> BoundReport:
    """k^t <= m * C(x,t) / C(x,s) for m-edge s-graphs with max i-degree at most
    Delta = C(x-i, s-i), x >= s real; 0 when x < t."""
    if not 1 <= i < s < t:
        raise ValueError(f"need 1 <= i < s < t, got i={i}, s={s}, t={t}")
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if delta < 0:
        raise ValueError(f"need Delta >= 0, got {delta}")

    if m == 0:
        return BoundReport(0, 0, "edge", None, "yes", ("no edges, no cliques",))
    if delta == 0:
        return BoundReport(
            0, 0, "edge", None, "no",
            ("max i-degree 0 admits no nonempty family, so the bound is vacuous",),
        )

    x = i + binom_inverse(delta, s - i)
    if x < t:
        return BoundReport(
            0, 0, "edge", x, "yes",
            ("x < t: the degree bound rules out any t-clique; "
             "m pairwise disjoint edges attain 0",),
        )
    notes: list[str] = []
    if isinstance(x, int):
        value: Real = _ratio(m * comb(x, t), comb(x, s))
        bs = comb(x, s)
        if m % bs == 0:
            eq = "yes"
            notes.append(f"{m // bs} disjoint complete blocks K^({s})_{x} attain equality")
        elif s >= i + 2:
            eq = "no"
            notes.append(
                f"equality forces a packing shadow, whose edge count is a multiple of C({x},{s}) = {bs}"
            )
        else:
            eq = "unknown"
            notes.append(
                f"C({x},{s}) does not divide m, but at s = i+1 non-packing extremal families are not ruled out"
            )
    else:
        value = m * binom_real(x, t) / binom_real(x, s)
        eq = "unknown"
        notes.append("degree parameter is not C(x-i, s-i) for integer x; tightness is open")
    return BoundReport(value, _floor(value), "edge", x, eq, tuple(notes))


def clique_bound(p: int, i: int, s: int, u: int, t: int, delta: int) -> BoundReport:
    """k^t <= p * C(x,t) / C(x,u) for s-graphs with exactly p u-cliques and max
    i-degree at most Delta = C(x-i, s-i); 0 when x < u (no u-clique exists) or
    u <= x < t.  u = s delegates to the edge bound."""
    if not 1 <= i < s <= u <= t:
        raise ValueError(f"need 1 <= i < s <= u <= t, got i={i}, s={s}, u={u}, t={t}")
    if p < 0:
        raise ValueError(f"need p >= 0, got {p}")
    if delta < 0:
        raise ValueError(f"need Delta >= 0, got {delta}")

    if u == s:
        if t == s:
            # Degenerate u = t = s: the count bounded is the edge count itself.
            return BoundReport(p, p, "clique", None, "yes",
                               ("u = t = s: the bound is the edge count",))
        rep = edge_bound(p, i, s, t, delta)
        return replace(rep, source="clique", notes=rep.notes + ("u = s reduces to the edge bound",))

    if p == 0:
        return BoundReport(0, 0, "clique", None, "yes", ("no u-cliques, no t-cliques",))
    if delta == 0:
        return BoundReport(
            0, 0, "clique", None, "no",
            ("max i-degree 0 admits no nonempty family, so the bound is vacuous",),
        )

    x = i + binom_inverse(delta, s - i)
    if x < u:
        return BoundReport(
            0, 0, "clique", x, "no",
            ("x < u: the degree bound forbids any u-clique, so no family has p > 0",),
        )
    if u == t:
        return BoundReport(p, p, "clique", x, "yes",
                           ("u = t: the ratio of binomials is 1",))
    if x < t:
        return BoundReport(
            0, 0, "clique", x, "yes",
            ("u <= x < t: no t-clique can occur; p disjoint copies of K^(s)_u attain 0",),
        )
    notes = []
    if isinstance(x, int):
        value: Real = _ratio(p * comb(x, t), comb(x, u))
        bu = comb(x, u)
        if p % bu == 0:
            eq = "yes"
            notes.append(f"{p // bu} disjoint complete blocks K^({s})_{x} attain equality")
        else:
            eq = "no"
            notes.append(
                f"equality forces the edges lying in u-cliques to form a packing shadow, "
                f"so C({x},{u}) = {bu} must divide p"
            )
    else:
        value = p * binom_real(x, t) / binom_real(x, u)
        eq = "unknown"
        notes.append("degree parameter is not C(x-i, s-i) for integer x; tightness is open")
    return BoundReport(value, _floor(value), "clique", x, eq, tuple(notes))


def graph_clique_bound(p: int, u: int, t: int, r: int) -> BoundReport:
    """2-graph form: k^t <= p * C(r,t) / C(r,u) for graphs with p u-cliques and
    max degree at most r - 1 (3 <= u <= t <= r); equality iff C(r,u) | p."""
    if not 3 <= u <= t <= r:
        raise ValueError(f"need 3 <= u <= t <= r, got u={u}, t={t}, r={r}")
    if p < 0:
        raise ValueError(f"need p >= 0, got {p}")
    rep = clique_bound(p, 1, 2, u, t, r - 1)
    # Direct formula cross-check of the specialization.
    direct = _ratio(p * comb(r, t), comb(r, u))
    if rep.value != direct:
        raise InternalCheckError(
            f"graph clique bound mismatch: specialized {rep.value} vs direct {direct}"
        )
    expected_eq = "yes" if p % comb(r, u) == 0 else "no"
    if p > 0 and rep.equality_possible != expected_eq:
        raise InternalCheckError(
            f"graph clique bound equality verdict {rep.equality_possible!r} "
            f"disagrees with divisibility ({expected_eq!r})"
        )
    return replace(rep, source="graph", x=r)


def neighborhood_ratio_bound(i: int, s: int, t: int, x: Real) -> Real:
    """Upper bound on k^{t-i}(J)/|J| over neighborhoods J of i-sets in any
    s-graph with max i-degree at most C(x-i, s-i):

        (x-s)_(t-s) / (t-i)_(t-s)   [ = C(x-i,t-i) / C(x-i,s-i) ]

    Exact for int/Fraction x, float otherwise; strictly increasing in x >= t-1.
    """
    if not 1 <= i < s < t:
        raise ValueError(f"need 1 <= i < s < t, got i={i}, s={s}, t={t}")
    if x < t - 1:
        raise ValueError(f"need x >= t-1 = {t - 1}, got x={x}")
    num = falling_factorial(x - s, t - s)
    den = falling_factorial(t - i, t - s)
    if isinstance(num, float):
        value: Real = num / den
    else:
        q = Fraction(num, den)
        value = int(q) if q.denominator == 1 else q
    # The two closed forms must agree (exactly for exact x).
    alt_num = binom_real(x - i, t - i)
    alt_den = binom_real(x - i, s - i)
    if isinstance(value, float):
        alt = alt_num / alt_den
        if abs(alt - value) > 1e-9 * max(1.0, abs(value)):
            raise InternalCheckError(f"neighborhood ratio forms disagree: {value} vs {alt}")
    else:
        if Fraction(alt_num) != Fraction(value) * Fraction(alt_den):
            raise InternalCheckError(f"neighborhood ratio forms disagree: {value} vs {alt_num}/{alt_den}")
    return value


def jung_scan(s: int, t: int, m_max: int) -> list[int]:
    """All m <= m_max where k_colex(m,s,t)/m equals max over m' <= m of the
    same ratio (exact rational comparison; ties qualify).

    Every m = C(r, s) with integer r >= t is such a maximizer; this is
    asserted internally.
    """
    if not s < t:
        raise ValueError(f"need s < t, got s={s}, t={t}")
    if m_max < 1:
        raise ValueError(f"need m_max >= 1, got {m_max}")
    out = []
    best = Fraction(0)
    for m in range(1, m_max + 1):
        ratio = Fraction(k_colex(m, s, t), m)
        if ratio >= best:
            best = ratio
            out.append(m)
    hits = set(out)
    r = t
    while comb(r, s) <= m_max:
        if comb(r, s) not in hits:
            raise InternalCheckError(
                f"m = C({r},{s}) = {comb(r, s)} should maximize k_colex(m,{s},{t})/m but was not flagged"
            )
        r += 1
    return out
