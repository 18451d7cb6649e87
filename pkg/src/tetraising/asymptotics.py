"""Large-spin asymptotics of the 6j-symbol and the saddle-point origin of
the geometric Fisher zeros.

In the oscillatory regime (positive squared volume) the 6j-symbol behaves
like cos(S + pi/4) / sqrt(12 pi V), where S is the Regge action of the
tetrahedron with edge lengths j_e + 1/2 and V its volume.  The stationary
points of the generating-function series in the spins reproduce the
geometric zeros: the coupling moduli balance the Stirling growth of the
triangle coefficients and the phases lock onto half the dihedral angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import AdmissibilityError
from .geometry import (
    TetraLengths,
    dihedral_angle,
    geometric_zeros,
    require_euclidean,
)
from .graphs import TETRA_VERTEX_TRIADS
from .recoupling import figurate


@dataclass(frozen=True)
class ReggeData:
    """Flat-tetrahedron data for twice-spins t: lengths j+1/2, external
    dihedral angles, volume, and the Regge action sum_e (j_e+1/2) theta_e."""

    spins: tuple
    lengths: tuple
    theta: dict
    volume: float
    action: float


def regge_data(t: Sequence[int]) -> ReggeData:
    """Geometry of the tetrahedron with edge lengths l_e = j_e + 1/2.

    Raises the geometry errors (Lorentzian or flat) when the shifted
    lengths do not close into a Euclidean tetrahedron.
    """
    t = tuple(t)
    lengths = tuple((x + 1) / 2 for x in t)
    tl = TetraLengths(lengths)
    vsq = require_euclidean(tl)
    theta = {e: dihedral_angle(tl, e) for e in range(1, 7)}
    action = sum(lengths[e - 1] * theta[e] for e in range(1, 7))
    return ReggeData(t, lengths, theta, math.sqrt(vsq), action)


def pr_estimate(t: Sequence[int]) -> float:
    """Leading asymptotic value cos(S + pi/4) / sqrt(12 pi V)."""
    rd = regge_data(t)
    return math.cos(rd.action + math.pi / 4) / math.sqrt(12 * math.pi * rd.volume)


def pr_estimate_unshifted(t: Sequence[int]) -> float:
    """Same estimate without the +1/2 length shift, for comparison; the
    shift measurably improves the fit."""
    lengths = tuple(x / 2 for x in t)
    tl = TetraLengths(lengths)
    vsq = require_euclidean(tl)
    action = sum(lengths[e - 1] * dihedral_angle(tl, e) for e in range(1, 7))
    return math.cos(action + math.pi / 4) / math.sqrt(12 * math.pi * math.sqrt(vsq))


def pr_envelope(t: Sequence[int]) -> float:
    """Amplitude 1/sqrt(12 pi V) of the asymptotic oscillation."""
    rd = regge_data(t)
    return 1 / math.sqrt(12 * math.pi * rd.volume)


def saddle_couplings(t: Sequence[int], epsilon: int = 1) -> dict:
    """Stationary-point couplings of the generating-function series.

    Identical to the geometric Fisher zeros evaluated on lengths
    l_e = j_e (the leading order drops the +1/2 shift); exposed separately
    to record the saddle-point origin.
    """
    # dihedral and face angles are scale invariant, so twice-spins serve
    # directly as lengths
    tl = TetraLengths(tuple(float(x) for x in t))
    return geometric_zeros(tl, epsilon).couplings


def _star_data(t: Sequence[int]):
    """Per vertex triad: twice-sum and the triad itself; errors out on
    boundary spins where the stationarity logs blow up."""
    data = []
    for triad in TETRA_VERTEX_TRIADS:
        tw = sum(t[i - 1] for i in triad)
        for i in triad:
            if tw - 2 * t[i - 1] <= 0:
                raise AdmissibilityError(
                    f"boundary spins: triad {triad} has J_v - 2j_e <= 0 for edge {i}"
                )
        data.append((triad, tw))
    return data


def saddle_residual(
    t: Sequence[int], couplings: Mapping[int, complex], epsilon: int = 1
) -> dict:
    """Per-edge stationarity residuals of the asymptotic action.

    real part:  4 ln|Y_e| + sum over the two vertices v of e of
                ln[ J_v (J_v - 2 j_e) / ((J_v - 2 j_i)(J_v - 2 j_j)) ]
    phase:      arg Y_e + epsilon theta_e / 2, wrapped to (-pi, pi].

    Both vanish when the couplings come from saddle_couplings(t, -epsilon):
    the sign convention here follows the cosine split of the asymptotic
    formula, which pairs the +epsilon branch with phase e^{-i eps theta/2}.
    """
    t = tuple(t)
    stars = _star_data(t)
    tl = TetraLengths(tuple(float(x) for x in t))
    out = {}
    for e in range(1, 7):
        log_sum = 4 * math.log(abs(couplings[e]))
        for triad, tw in stars:
            if e not in triad:
                continue
            i, j = (x for x in triad if x != e)
            # twice-values cancel out of the degree-0 ratio
            log_sum += math.log(
                tw * (tw - 2 * t[e - 1]) / ((tw - 2 * t[i - 1]) * (tw - 2 * t[j - 1]))
            )
        phase = math.atan2(couplings[e].imag, couplings[e].real)
        phase_res = _wrap_angle(phase + epsilon * dihedral_angle(tl, e) / 2)
        out[e] = (log_sum, phase_res)
    return out


def saddle_residual_discrete(
    t: Sequence[int], couplings: Mapping[int, complex]
) -> dict:
    """Exact-factorial forward-difference version of the real stationarity
    condition, per edge.

    Replaces the Stirling logs with the true unit-step differences of
    ln[(J_v+1)!/prod(J_v-2j)!]; at the saddle couplings this residual does
    not vanish identically but decays like 1/j, which quantifies the
    Stirling error of the continuum stationarity equation.
    """
    t = tuple(t)
    stars = _star_data(t)
    out = {}
    for e in range(1, 7):
        val = 4 * math.log(abs(couplings[e]))
        for triad, tw in stars:
            if e not in triad:
                continue
            if tw % 2:
                raise AdmissibilityError(f"triad {triad} has half-integral spin sum")
            jv = tw // 2
            i, j = (x for x in triad if x != e)
            val += math.log(jv + 2) + math.log(jv - t[e - 1])
            val -= math.log(jv - t[i - 1] + 1) + math.log(jv - t[j - 1] + 1)
        out[e] = val
    return out


def _wrap_angle(x: float) -> float:
    """Wrap to (-pi, pi]."""
    y = math.fmod(x + math.pi, 2 * math.pi)
    if y <= 0:
        y += 2 * math.pi
    return y - math.pi


# ---------------------------------------------------------------------------
# figurate growth diagnostics
# ---------------------------------------------------------------------------

def figurate_asymptote(p: int, q: int) -> float:
    """Leading log estimate q ln(2p/q) of ln T(p, q), valid for p >> q."""
    if p < 1 or q < 1:
        raise ValueError("figurate numbers need p, q >= 1")
    return q * math.log(2 * p / q)


def figurate_log_ratio(p: int, q: int) -> float:
    """Diagnostic ratio ln T(p, q) / ln p; approaches q from below as p
    grows at fixed q."""
    if p < 2:
        raise ValueError("ratio needs p >= 2")
    value = figurate(p, q).value
    return _log_big(value) / math.log(p)


def _log_big(n: int) -> float:
    if n <= 0:
        raise ValueError("positive integer expected")
    return math.log(n)
