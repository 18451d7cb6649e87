"""Exact spin recoupling: admissibility, Racah weights, 6j-symbols,
generating-function partial sums and cross-polytope figurate numbers.

Spins are half-integers stored as twice their value, so all spin
arithmetic is integer arithmetic.  A tetrahedral spin assignment is a
sequence (t1, ..., t6) of twice-values on the edges 1..6, with the
labeling of :mod:`tetraising.graphs`: the four vertex triads are
(1,2,3), (1,5,6), (2,4,6), (3,4,5) and the three 4-cycles (1,2,4,5),
(2,3,5,6), (1,3,4,6).

The central object is the Racah weight

    W(j) = prod_v Delta_v(j) * {6j}
         = sum_n (-1)^n (n+1)! / ( prod_v (n - S_v)!  prod_g (Q_g - n)! )

with S_v the spin sums over vertex triads, Q_g the sums over 4-cycles and
n running over max_v S_v <= n <= min_g Q_g.  The sign (-1)^n is fixed by
requiring W(0,...,0) = +1 and exact agreement, coefficient by
coefficient, with the multinomial expansion of 1/P_T^2 over the cycles of
the tetrahedron graph (see tests).  W is an exact rational; the 6j-symbol
itself lives in a square-root extension and is returned as a float.

Everything here is a pure function; the only shared state is the
factorial memo, which is safe for concurrent readers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterator, Mapping, Sequence

from .errors import AdmissibilityError, UnknownGraphError
from .graphs import (
    Graph,
    TETRA,
    TETRA_FOUR_CYCLES,
    TETRA_VERTEX_TRIADS,
    THETA,
    TRIANGLE,
)

_fact = cache(math.factorial)


# ---------------------------------------------------------------------------
# admissibility and triangle coefficients
# ---------------------------------------------------------------------------

def is_admissible(ta: int, tb: int, tc: int) -> bool:
    """Triangular inequalities plus integer-sum parity, in twice-values."""
    if min(ta, tb, tc) < 0:
        return False
    if (ta + tb + tc) % 2:
        return False
    return abs(ta - tb) <= tc <= ta + tb


def triangle_coeff_sq(ta: int, tb: int, tc: int) -> Fraction:
    """Squared triangle coefficient (a+b+c+1)! / ((a+b-c)!(a-b+c)!(-a+b+c)!).

    Exact, and a positive integer for admissible triples.
    """
    if not is_admissible(ta, tb, tc):
        raise AdmissibilityError(f"inadmissible spin triple (twice-values {ta},{tb},{tc})")
    return Fraction(
        _fact((ta + tb + tc) // 2 + 1),
        _fact((ta + tb - tc) // 2) * _fact((ta - tb + tc) // 2) * _fact((-ta + tb + tc) // 2),
    )


def _vertex_sums(t: Sequence[int]) -> list[int] | None:
    """Spin sums over the four vertex triads, or None if inadmissible."""
    sums = []
    for triad in TETRA_VERTEX_TRIADS:
        a, b, c = (t[i - 1] for i in triad)
        if not is_admissible(a, b, c):
            return None
        sums.append((a + b + c) // 2)
    return sums


def _racah_sum(s_v, q_g) -> int:
    """Signed integer sum over n of (-1)^n (n+1)! / (prod (n-S)! (Q-n)!).

    Each term is an integer: through the occupation-number change of
    variables it equals (n+1) times a multinomial coefficient.
    """
    total = 0
    for n in range(max(s_v), min(q_g) + 1):
        den = 1
        for s in s_v:
            den *= _fact(n - s)
        for q in q_g:
            den *= _fact(q - n)
        term = _fact(n + 1) // den
        total += -term if n % 2 else term
    return total


def racah_weight(t: Sequence[int]) -> Fraction:
    """Exact Racah single-sum weight prod_v Delta_v * {6j} for twice-spins t.

    Returns 0 whenever a vertex triad is inadmissible.  The value is an
    integer for every admissible assignment (it is a signed sum of
    multinomial coefficients), returned as an exact rational.
    """
    t = tuple(t)
    if len(t) != 6:
        raise ValueError("expected six twice-integer spins")
    s_v = _vertex_sums(t)
    if s_v is None:
        return Fraction(0)
    q_g = [sum(t[i - 1] for i in cyc) // 2 for cyc in TETRA_FOUR_CYCLES]
    return Fraction(_racah_sum(s_v, q_g))


def delta_product_sq(t: Sequence[int]) -> Fraction:
    """prod_v Delta_v^2 over the four vertex triads (exact, positive)."""
    prod = Fraction(1)
    for triad in TETRA_VERTEX_TRIADS:
        prod *= triangle_coeff_sq(*(t[i - 1] for i in triad))
    return prod


def sixj(t: Sequence[int]) -> float:
    """6j-symbol for twice-spins t, as a float; 0.0 for inadmissible spins.

    Computed as racah_weight / sqrt(prod_v Delta_v^2).  Conversion goes
    through logarithms of the big-integer numerators and denominators so
    large spins do not overflow.
    """
    w = racah_weight(t)
    if w == 0:
        return 0.0
    dd = delta_product_sq(t)
    log_val = (
        math.log(abs(w.numerator)) - math.log(w.denominator)
        - 0.5 * (math.log(dd.numerator) - math.log(dd.denominator))
    )
    return math.exp(log_val) if w > 0 else -math.exp(log_val)


# ---------------------------------------------------------------------------
# generating-function partial sums
# ---------------------------------------------------------------------------

def _triad_range(ta: int, tb: int, cap: int) -> range:
    """Twice-values tc with (ta, tb, tc) admissible and tc <= cap."""
    lo = abs(ta - tb)
    hi = min(ta + tb, cap)
    return range(lo, hi + 1, 2)


def iter_admissible_sextuples(cap: int) -> Iterator[tuple[int, int, int, int, int, int]]:
    """All twice-spin sextuples with every t_e <= cap and all four vertex
    triads admissible, in lexicographic order of (t1, t2, t3, t4, t6, t5)."""
    for t1 in range(cap + 1):
        for t2 in range(cap + 1):
            for t3 in _triad_range(t1, t2, cap):
                for t4 in range(cap + 1):
                    for t6 in _triad_range(t2, t4, cap):
                        lo = max(abs(t1 - t6), abs(t3 - t4))
                        hi = min(t1 + t6, t3 + t4, cap)
                        if (t1 + t6) % 2 != (t3 + t4) % 2:
                            continue
                        if lo % 2 != (t1 + t6) % 2:
                            lo += 1
                        for t5 in range(lo, hi + 1, 2):
                            yield (t1, t2, t3, t4, t5, t6)


def genfun_partial_sum(g: Graph, couplings: Mapping[int, complex], cap: int):
    """Partial sum of the spin-network generating function, all j_e <= cap/2.

    For the tetrahedron the summand is the exact Racah weight, converted to
    float only when multiplied by the couplings; for the theta graph the
    exact theta-graph weight is used; for the triangle the spins are forced
    equal and weighted by (-1)^{2j} (2j+1).  Convergence is the caller's
    concern: the series only converges for couplings small enough, and the
    CLI reports a last-shell tail estimate instead of guessing a radius.
    """
    if g.name == TETRA:
        return _genfun_tetra(couplings, cap)
    if g.name == THETA:
        return _genfun_theta(couplings, cap)
    if g.name == TRIANGLE:
        return _genfun_triangle(couplings, cap)
    raise UnknownGraphError(f"generating function not implemented for {g.name!r}")


def _genfun_tetra(couplings, cap):
    # fused enumeration over admissible sextuples with running coupling
    # products; the exact integer weight is cached on the sorted vertex and
    # 4-cycle spin sums, which determine the Racah sum completely
    p1, p2, p3, p4, p5, p6 = (
        [couplings[e] ** k for k in range(cap + 1)] for e in range(1, 7)
    )
    cache: dict[tuple, float] = {}
    total = 0
    for t1 in range(cap + 1):
        w1 = p1[t1]
        for t2 in range(cap + 1):
            w12 = w1 * p2[t2]
            for t3 in range(abs(t1 - t2), min(t1 + t2, cap) + 1, 2):
                s1 = (t1 + t2 + t3) >> 1
                w123 = w12 * p3[t3]
                for t4 in range(cap + 1):
                    w1234 = w123 * p4[t4]
                    for t6 in range(abs(t2 - t4), min(t2 + t4, cap) + 1, 2):
                        if (t1 + t6) & 1 != (t3 + t4) & 1:
                            continue
                        lo5 = max(abs(t1 - t6), abs(t3 - t4))
                        hi5 = min(t1 + t6, t3 + t4, cap)
                        if lo5 & 1 != (t1 + t6) & 1:
                            lo5 += 1
                        s3 = (t2 + t4 + t6) >> 1
                        w12346 = w1234 * p6[t6]
                        for t5 in range(lo5, hi5 + 1, 2):
                            s2 = (t1 + t5 + t6) >> 1
                            s4 = (t3 + t4 + t5) >> 1
                            q1 = (t1 + t2 + t4 + t5) >> 1
                            q2 = (t2 + t3 + t5 + t6) >> 1
                            q3 = (t1 + t3 + t4 + t6) >> 1
                            key = (*sorted((s1, s2, s3, s4)), *sorted((q1, q2, q3)))
                            w = cache.get(key)
                            if w is None:
                                w = float(_racah_sum((s1, s2, s3, s4), (q1, q2, q3)))
                                cache[key] = w
                            if w:
                                total = total + w * w12346 * p5[t5]
    return total


def _genfun_theta(couplings, cap):
    # dual-spin variables k_i >= 0 with 2j_1 = k_2 + k_3 etc.; the weight is
    # (-1)^{k1+k2+k3} (k1+k2+k3+1)! / (k1! k2! k3!)
    y1, y2, y3 = couplings[1], couplings[2], couplings[3]
    total = 0
    for k1 in range(cap + 1):
        for k2 in range(cap + 1 - k1):
            for k3 in range(min(cap - k1, cap - k2) + 1):
                n = k1 + k2 + k3
                w = _fact(n + 1) // (_fact(k1) * _fact(k2) * _fact(k3))
                coeff = float(w) if n % 2 == 0 else -float(w)
                total = total + coeff * (y2 * y3) ** k1 * (y1 * y3) ** k2 * (y1 * y2) ** k3
    return total


def _genfun_triangle(couplings, cap):
    x = couplings[1] * couplings[2] * couplings[3]
    total = 0
    for tj in range(cap + 1):
        term = (tj + 1) * x ** tj
        total = total + (term if tj % 2 == 0 else -term)
    return total


# ---------------------------------------------------------------------------
# figurate numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FigurateNumber:
    """Figurate number T(p, q) of the p-dimensional cross polytope."""

    p: int
    q: int
    value: int


def _series_inv_one_plus(power: int, order: int) -> list[int]:
    """Coefficients of (1+Y)^(-power) up to Y^order."""
    return [(-1) ** m * math.comb(power + m - 1, m) for m in range(order + 1)]


def figurate(p: int, q: int) -> FigurateNumber:
    """T(p, q) by coefficient extraction from Y (1-Y)^(p-1) / (1+Y)^(p+1).

    The generating function is the definition used throughout:

        Y (1-Y)^(p-1) / (1+Y)^(p+1) = sum_{k>=1} (-1)^(k-1) T(p, k) Y^k.

    A binomial-sum evaluation is available as a cross check in
    :func:`figurate_binomial`.
    """
    if p < 1 or q < 1:
        raise ValueError("figurate numbers are defined for p, q >= 1")
    # numerator Y (1-Y)^(p-1): coefficient of Y^(i+1) is (-1)^i C(p-1, i)
    inv = _series_inv_one_plus(p + 1, q - 1)
    coeff = 0
    for i in range(min(p - 1, q - 1) + 1):
        coeff += (-1) ** i * math.comb(p - 1, i) * inv[q - 1 - i]
    value = (-1) ** (q - 1) * coeff
    return FigurateNumber(p, q, value)


def figurate_binomial(p: int, q: int) -> int:
    """Binomial cross check: sum_n C(p-1, n) C(q+n, p)."""
    return sum(math.comb(p - 1, n) * math.comb(q + n, p) for n in range(p))


def figurate_bivariate_check(order: int) -> bool:
    """Check the table T(p, q) against x y / ((1-y)(1-x-y-xy)) up to total
    degree ``order``.  Vacuously true for order < 2."""
    if order > 64:
        raise ValueError("bivariate check capped at order 64")
    if order < 2:
        return True
    deg = order - 2  # after factoring out the leading x*y
    # expand 1/(1 - (x+y+xy)) = sum_k (x+y+xy)^k, truncated
    series: dict[tuple[int, int], int] = {}
    for k in range(deg + 1):
        for a in range(k + 1):
            for b in range(k + 1 - a):
                c = k - a - b
                i, j = a + c, b + c
                if i + j > deg:
                    continue
                series[i, j] = series.get((i, j), 0) + math.factorial(k) // (
                    math.factorial(a) * math.factorial(b) * math.factorial(c)
                )
    # multiply by 1/(1-y) = sum_m y^m
    table: dict[tuple[int, int], int] = {}
    for (i, j), v in series.items():
        for m in range(deg - i - j + 1):
            table[i, j + m] = table.get((i, j + m), 0) + v
    for p in range(1, order):
        for q in range(1, order - p + 1):
            if figurate(p, q).value != table.get((p - 1, q - 1), 0):
                return False
    return True


def figurate_transform_partial(
    tk: Sequence[int], cap: int
) -> tuple[Fraction, Fraction]:
    """Both sides of the edgewise figurate transform of the Racah weight.

    Returns (lhs_partial, rhs) with

        lhs_partial = 2^6 sum_{j <= cap/2} W(j) prod_e (-1)^{2k_e} T(2j_e+1, 2k_e+1)
        rhs         = W(k(4), k(5), k(6), k(1), k(2), k(3))

    i.e. the right-hand side is the Racah weight of the opposite-edge
    swapped spins.  The j-series oscillates and is unbounded term by term,
    so no equality is asserted here; callers inspect the partial sums.
    """
    tk = tuple(tk)
    if len(tk) != 6:
        raise ValueError("expected six twice-integer spins")
    fig_cache: dict[tuple[int, int], int] = {}

    def fig(p, q):
        v = fig_cache.get((p, q))
        if v is None:
            v = figurate(p, q).value
            fig_cache[p, q] = v
        return v

    sign = -1 if sum(tk) % 2 else 1
    lhs = Fraction(0)
    for t in iter_admissible_sextuples(cap):
        w = racah_weight(t)
        if w == 0:
            continue
        for e in range(6):
            w *= fig(t[e] + 1, tk[e] + 1)
        lhs += w
    lhs = 64 * sign * lhs
    swapped = (tk[3], tk[4], tk[5], tk[0], tk[1], tk[2])
    return lhs, racah_weight(swapped)
