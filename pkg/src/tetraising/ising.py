"""Brute-force Ising partition functions and the duality identity checks.

Identities that the text states over rationals are evaluated exactly here:
couplings enter either as plain rationals Y_e = tanh y_e, or as hyperbolic
pairs (cosh y_e, sinh y_e) with c^2 - s^2 = 1, which makes every Boltzmann
factor e^{+-y} = c +- s rational.  All checks return a residual that is an
exact rational zero for rational inputs; float/complex inputs flow through
the same code paths and give numerical residuals.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Number
from typing import Mapping

from .errors import CouplingError, DegenerateGeometryError, PoleError
from .graphs import (
    DUAL_OF,
    Graph,
    LoopPolynomial,
    TETRA,
    TETRA_DUAL,
    builtin_graph,
    dual_couplings,
    enumerate_cycles,
    eval_loop_polynomial,
)

VERTEX_LIMIT = 24

_poly_cache: dict[str, LoopPolynomial] = {}


def _builtin_poly(name: str) -> LoopPolynomial:
    poly = _poly_cache.get(name)
    if poly is None:
        poly = enumerate_cycles(builtin_graph(name))
        _poly_cache[name] = poly
    return poly


def _spin_sum(g: Graph, w_plus: Mapping[int, object], w_minus: Mapping[int, object]):
    """sum over spin configurations of prod_e w(sigma_s sigma_t), where w is
    w_plus on aligned edges and w_minus on anti-aligned ones."""
    if g.vertex_count > VERTEX_LIMIT:
        raise ValueError(f"{g.vertex_count} vertices exceeds the 2^V limit of {VERTEX_LIMIT}")
    total = 0
    for config in range(1 << g.vertex_count):
        term = 1
        for eid, a, b in g.edges:
            aligned = ((config >> a) & 1) == ((config >> b) & 1)
            term = term * (w_plus[eid] if aligned else w_minus[eid])
        total = total + term
    return total


def _as_hyperbolic_pair(value):
    """Normalize a coupling to a (cosh y, sinh y) pair.

    Tuples pass through untouched (exact path); numbers are treated as the
    coupling y itself and converted with cosh/sinh.
    """
    if isinstance(value, tuple):
        c, s = value
        if c * c - s * s != 1:
            raise CouplingError(f"hyperbolic pair {value} violates c^2 - s^2 = 1")
        return c, s
    if isinstance(value, complex):
        return cmath.cosh(value), cmath.sinh(value)
    if isinstance(value, Number):
        v = float(value)
        return math.cosh(v), math.sinh(v)
    raise CouplingError(f"cannot interpret coupling {value!r}")


def ising_partition(g: Graph, y: Mapping[int, object]):
    """Ising partition function sum_{sigma} exp(sum_e y_e sigma_s sigma_t).

    Couplings may be numbers (float or complex y_e) or hyperbolic pairs
    (cosh y_e, sinh y_e); rational pairs make the result exact.
    """
    pairs = {eid: _as_hyperbolic_pair(y[eid]) for eid, _, _ in g.edges}
    w_plus = {eid: c + s for eid, (c, s) in pairs.items()}
    w_minus = {eid: c - s for eid, (c, s) in pairs.items()}
    return _spin_sum(g, w_plus, w_minus)


def check_high_temp(g: Graph, y: Mapping[int, object]):
    """Residual of I = 2^V (prod_e cosh y_e) P[{tanh y_e}].

    Exact zero for rational hyperbolic pairs.
    """
    pairs = {eid: _as_hyperbolic_pair(y[eid]) for eid, _, _ in g.edges}
    partition = ising_partition(g, pairs)
    cosh_prod = 1
    tanh = {}
    for eid, (c, s) in pairs.items():
        cosh_prod = cosh_prod * c
        tanh[eid] = s / c
    poly = eval_loop_polynomial(_graph_poly(g), tanh)
    return partition - (1 << g.vertex_count) * cosh_prod * poly


def check_low_temp(g: Graph, q: Mapping[int, object]):
    """Residual of the dual-graph loop expansion at low temperature.

    With q_e = e^{-2 y_e} supplied directly (rational q gives an exact
    check), the identity I = 2 prod_e e^{y_e} P_dual[{q_e}] reduces to

        sum_{sigma} prod_{e anti-aligned} q_e  =  2 P_dual[{q_e}],

    whose residual is returned.
    """
    dual_name = DUAL_OF.get(g.name)
    if dual_name is None:
        raise CouplingError(f"no built-in dual registered for graph {g.name!r}")
    ones = {eid: 1 for eid, _, _ in g.edges}
    lhs = _spin_sum(g, ones, dict(q))
    rhs = 2 * eval_loop_polynomial(_builtin_poly(dual_name), dict(q))
    return lhs - rhs


def check_westbury(g: Graph, couplings: Mapping[int, object]):
    """Residual of the squared-inverse identity between the spin-network
    generating function and the Ising partition function.

    Written with Y_e = tanh y_e, the identity is
    prod_e (1 - Y_e^2) * (1/P^2) * I^2 = 2^{2V}.  The cosh^2 factors inside
    I^2 cancel prod (1 - Y^2) identically, so the exact evaluation uses the
    reduced Boltzmann weights (1 +- Y):

        [ sum_sigma prod_e (1 + sigma_s sigma_t Y_e) ]^2 / P[Y]^2 - 2^{2V}.
    """
    w_plus = {eid: 1 + couplings[eid] for eid, _, _ in g.edges}
    w_minus = {eid: 1 - couplings[eid] for eid, _, _ in g.edges}
    poly_val = eval_loop_polynomial(_graph_poly(g), dict(couplings))
    if poly_val == 0:
        raise PoleError("loop polynomial vanishes: couplings sit on a Fisher zero")
    reduced = _spin_sum(g, w_plus, w_minus)
    return (reduced * reduced) / (poly_val * poly_val) - (1 << (2 * g.vertex_count))


def duality_on_p_residuals(g: Graph, couplings: Mapping[int, object]):
    """Residuals of both directions of the loop-polynomial duality

        2^(V-E-1) prod_e (1 + Y*_e) P[Y]      = P_dual[Y*]
        P[Y] - 2^(1-V)  prod_e (1 + Y_e) P_dual[Y*]

    with Y*_e the edgewise dual couplings.  Exact over rationals.
    """
    dual_name = DUAL_OF.get(g.name)
    if dual_name is None:
        raise CouplingError(f"no built-in dual registered for graph {g.name!r}")
    starred = dual_couplings(couplings)
    p_here = eval_loop_polynomial(_graph_poly(g), dict(couplings))
    p_dual = eval_loop_polynomial(_builtin_poly(dual_name), starred)
    v, n_edges = g.vertex_count, g.edge_count()
    prod_star = 1
    prod_plain = 1
    for eid, _, _ in g.edges:
        prod_star = prod_star * (1 + starred[eid])
        prod_plain = prod_plain * (1 + couplings[eid])
    res_forward = Fraction(2) ** (v - n_edges - 1) * prod_star * p_here - p_dual
    res_backward = p_here - Fraction(2) ** (1 - v) * prod_plain * p_dual
    return res_forward, res_backward


def self_duality_residual(couplings: Mapping[int, object]):
    """Residual of prod_e (1 + Y*_e) P_T[Y] = 8 P_T*[Y*] on the tetrahedron."""
    for eid in range(1, 7):
        if couplings[eid] == -1:
            raise PoleError(f"coupling on edge {eid} is -1, a pole of the duality map")
    starred = dual_couplings(couplings)
    prod_star = 1
    for eid in range(1, 7):
        prod_star = prod_star * (1 + starred[eid])
    p_t = eval_loop_polynomial(_builtin_poly(TETRA), dict(couplings))
    p_dual = eval_loop_polynomial(_builtin_poly(TETRA_DUAL), starred)
    return prod_star * p_t - 8 * p_dual


def pachner_reduce(couplings: Mapping[int, object]):
    """Contract the (4,5,6) triangle of the tetrahedron to a point.

    Returns (factor, reduced) with P_T[Y] = factor * P_Theta[reduced],
    factor = 1 + Y4 Y5 Y6 and the renormalized couplings

        Yt_1 = Y1 sqrt( (Y5 + Y4 Y6)(Y6 + Y4 Y5) / ((Y4 + Y5 Y6)(1 + Y4 Y5 Y6)) )

    and cyclic variants.  Principal square roots; only the pairwise
    products enter P_Theta, so the identity is branch-stable for positive
    couplings and is verified by the residual, not by branch bookkeeping.
    """
    y = {eid: complex(couplings[eid]) for eid in range(1, 7)}
    u4 = y[4] + y[5] * y[6]
    u5 = y[5] + y[4] * y[6]
    u6 = y[6] + y[4] * y[5]
    factor = 1 + y[4] * y[5] * y[6]
    for name, val in (("Y4 + Y5 Y6", u4), ("Y5 + Y4 Y6", u5), ("Y6 + Y4 Y5", u6), ("1 + Y4 Y5 Y6", factor)):
        if val == 0:
            raise DegenerateGeometryError(f"degenerate reduction: {name} vanishes")
    reduced = {
        1: y[1] * cmath.sqrt(u5 * u6 / (u4 * factor)),
        2: y[2] * cmath.sqrt(u4 * u6 / (u5 * factor)),
        3: y[3] * cmath.sqrt(u4 * u5 / (u6 * factor)),
    }
    return factor, reduced


def scissor_transform(couplings: Mapping[int, object]) -> dict[int, complex]:
    """Inversion of the couplings around the (2,3,5,6) 4-cycle.

    Leaves the tetrahedron loop polynomial invariant; the principal square
    root is an involution for positive couplings.
    """
    prod = complex(couplings[2]) * complex(couplings[3]) * complex(couplings[5]) * complex(couplings[6])
    if prod == 0:
        raise CouplingError("scissor transform needs Y2 Y3 Y5 Y6 != 0")
    root = cmath.sqrt(prod)
    out = {1: complex(couplings[1]), 4: complex(couplings[4])}
    for eid in (2, 3, 5, 6):
        out[eid] = root / complex(couplings[eid])
    return out


def _graph_poly(g: Graph) -> LoopPolynomial:
    if g.name in DUAL_OF:
        return _builtin_poly(g.name)
    return enumerate_cycles(g)
