"""Random inputs for identity sweeps: rational couplings, hyperbolic
pairs, and edge-length draws with the required rejection rules."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import DegenerateGeometryError, LorentzianRegimeError, PoleError
from .geometry import (
    TetraLengths,
    cycle_variables,
    quadratic_coeffs,
    require_euclidean,
)


def rational(rng: random.Random, den_max: int = 9, num_max: int = 9) -> Fraction:
    return Fraction(rng.randint(-num_max, num_max), rng.randint(1, den_max))


def rational_couplings(rng: random.Random, edges, avoid_minus_one: bool = True) -> dict:
    out = {}
    for e in edges:
        y = rational(rng)
        while avoid_minus_one and y == -1:
            y = rational(rng)
        out[e] = y
    return out


def positive_rational_couplings(rng: random.Random, edges) -> dict:
    return {e: Fraction(rng.randint(1, 9), rng.randint(1, 9)) for e in edges}


def hyperbolic_pair(rng: random.Random) -> tuple[Fraction, Fraction]:
    """Rational (cosh, sinh) with c^2 - s^2 = 1, from a Pythagorean-style
    parametrization c = (m^2 + k^2)/(m^2 - k^2), s = 2mk/(m^2 - k^2)."""
    m = rng.randint(2, 9)
    k = rng.randint(1, m - 1)
    den = m * m - k * k
    return Fraction(m * m + k * k, den), Fraction(2 * m * k, den)


def hyperbolic_couplings(rng: random.Random, edges) -> dict:
    return {e: hyperbolic_pair(rng) for e in edges}


def euclidean_tetra(rng: random.Random, lo: float = 0.5, hi: float = 2.0) -> TetraLengths:
    """Rejection-sample six real lengths forming a Euclidean tetrahedron
    (strict face triangle inequalities and positive squared volume)."""
    while True:
        t = TetraLengths(tuple(rng.uniform(lo, hi) for _ in range(6)))
        try:
            require_euclidean(t)
        except (DegenerateGeometryError, LorentzianRegimeError):
            continue
        return t


def complex_tetra_lengths(rng: random.Random, scale: float = 1.0) -> TetraLengths:
    """Random complex length sextuple staying clear of the parametrization
    poles (degenerate quadratic, n = 0, n on a 4-cycle semi-perimeter)."""
    while True:
        t = TetraLengths(
            tuple(
                complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))
                for _ in range(6)
            )
        )
        a, _, _ = quadratic_coeffs(t)
        if abs(a) < 0.05 * scale * scale:
            continue
        try:
            ok = True
            for root in "+-":
                n, m = cycle_variables(t, root)
                if abs(n) < 1e-3 * scale or any(abs(v) < 1e-3 * scale for v in m.values()):
                    ok = False
                    break
        except (DegenerateGeometryError, PoleError):
            continue
        if ok:
            return t


def random_triangle_with_point(rng: random.Random):
    """A nondegenerate real triangle and an interior-ish point for the
    cevian construction."""
    while True:
        pts = [(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3)]
        (ax, ay), (bx, by), (cx, cy) = pts
        area2 = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
        if abs(area2) < 0.3:
            continue
        w = [rng.uniform(0.15, 0.7) for _ in range(3)]
        tot = sum(w)
        ox = sum(wi * p[0] for wi, p in zip(w, pts)) / tot
        oy = sum(wi * p[1] for wi, p in zip(w, pts)) / tot
        return pts[0], pts[1], pts[2], (ox, oy)
