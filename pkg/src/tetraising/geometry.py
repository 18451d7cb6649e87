"""Triangle and tetrahedron geometry over real and complex edge lengths,
and the parametrizations of the Fisher zeros of the loop polynomials.

Lengths on the tetrahedron are always labeled like the edges of the dual
tetrahedron: opposite pairs (1,4), (2,5), (3,6), faces {1,2,3}, {1,5,6},
{2,4,6}, {3,4,5} and vertex stars {1,2,6}, {1,3,5}, {2,3,4}, {4,5,6}.
Every zero parametrization ultimately rests on cycle variables: writing
the loop polynomial as 1 + sum of cycle monomials L_C, the equation
P = 0 is trivialized by homogeneous variables M_C with L_C = -M_C / n,
n = sum_C M_C, and the single constraint that the product of the 3-cycle
variables equals -n times the product of the 4-cycle ones.  Complex edge
lengths plus the auxiliary variable n parametrize the M_C; n solves a
quadratic whose discriminant is -9 V^2 with V^2 the squared volume.  On
real lengths with V^2 > 0 the zeros become products of half-angle
tangents with a phase given by half the external dihedral angle.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

from .errors import (
    DegenerateGeometryError,
    FlatTetrahedronError,
    LorentzianRegimeError,
    PoleError,
)
from .graphs import (
    TETRA,
    TETRA_FOUR_CYCLES,
    TETRA_TRIANGLES,
    TETRA_VERTEX_TRIADS,
    THETA,
    TRIANGLE,
    builtin_graph,
    enumerate_cycles,
    eval_loop_polynomial,
)

#: faces of the dual tetrahedron (triangles formed by the length labels)
DUAL_FACES = TETRA_VERTEX_TRIADS

#: per edge: the two dual faces containing it, each as (face, other, other)
FACES_AT_EDGE = {
    1: (((1, 2, 3), 2, 3), ((1, 5, 6), 5, 6)),
    2: (((1, 2, 3), 1, 3), ((2, 4, 6), 4, 6)),
    3: (((1, 2, 3), 1, 2), ((3, 4, 5), 4, 5)),
    4: (((2, 4, 6), 2, 6), ((3, 4, 5), 3, 5)),
    5: (((1, 5, 6), 1, 6), ((3, 4, 5), 3, 4)),
    6: (((1, 5, 6), 1, 5), ((2, 4, 6), 2, 4)),
}

#: per edge: the two dual faces avoiding it
FACES_AVOIDING_EDGE = {
    1: ((2, 4, 6), (3, 4, 5)),
    2: ((1, 5, 6), (3, 4, 5)),
    3: ((1, 5, 6), (2, 4, 6)),
    4: ((1, 2, 3), (1, 5, 6)),
    5: ((1, 2, 3), (2, 4, 6)),
    6: ((1, 2, 3), (3, 4, 5)),
}

#: per edge: the unique 4-cycle avoiding it (shared with the opposite edge)
FOUR_CYCLE_AVOIDING = {
    1: (2, 3, 5, 6), 4: (2, 3, 5, 6),
    2: (1, 3, 4, 6), 5: (1, 3, 4, 6),
    3: (1, 2, 4, 5), 6: (1, 2, 4, 5),
}

#: 3-cycle of the tetrahedron graph -> opposite dual face
OPPOSITE_FACE = {
    (1, 2, 6): (3, 4, 5),
    (1, 3, 5): (2, 4, 6),
    (2, 3, 4): (1, 5, 6),
    (4, 5, 6): (1, 2, 3),
}

#: the face containing a given unordered pair of edges, with its third edge
_PAIR_THIRD = {}
for _face in DUAL_FACES:
    for _i, _j in itertools.combinations(_face, 2):
        (_k,) = set(_face) - {_i, _j}
        _PAIR_THIRD[frozenset((_i, _j))] = _k

GEOMETRIC = "GEOMETRIC"
PREGEOMETRIC = "PREGEOMETRIC"
TRIANGLE_ZEROS = "TRIANGLE"
CEVIAN = "CEVIAN"


def _csqrt(z):
    """Principal square root that stays real for nonnegative reals."""
    if isinstance(z, complex):
        return cmath.sqrt(z)
    return math.sqrt(z) if z >= 0 else cmath.sqrt(complex(z))


@dataclass(frozen=True)
class TriangleLengths:
    """Three nonzero (possibly complex) edge lengths."""

    l: tuple

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(self.l))
        if len(self.l) != 3:
            raise ValueError("expected three lengths")
        if any(x == 0 for x in self.l):
            raise ValueError("lengths must be nonzero")


@dataclass(frozen=True)
class TetraLengths:
    """Six nonzero (possibly complex) edge lengths with opposite pairs
    (1,4), (2,5), (3,6)."""

    l: tuple

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(self.l))
        if len(self.l) != 6:
            raise ValueError("expected six lengths")
        if any(x == 0 for x in self.l):
            raise ValueError("lengths must be nonzero")

    def edge(self, eid: int):
        return self.l[eid - 1]

    def is_real_positive(self) -> bool:
        return all(not isinstance(x, complex) and x > 0 for x in self.l)


@dataclass(frozen=True)
class ZeroSet:
    """A candidate Fisher zero: couplings on a named graph, plus how it
    was produced (parametrization, sign epsilon, quadratic branch)."""

    graph: str
    couplings: dict
    provenance: str
    epsilon: int | None = None
    branch: str | None = None


_zero_poly_cache = {}


def verify_zero(z: ZeroSet) -> float:
    """|P(Y)| normalized by the same sum with |Y_e| in place of Y_e."""
    poly = _zero_poly_cache.get(z.graph)
    if poly is None:
        poly = enumerate_cycles(builtin_graph(z.graph))
        _zero_poly_cache[z.graph] = poly
    value = eval_loop_polynomial(poly, z.couplings)
    norm = eval_loop_polynomial(poly, {e: abs(y) for e, y in z.couplings.items()})
    return abs(value) / norm


# ---------------------------------------------------------------------------
# triangles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriangleAngles:
    """cos, sin and tan(phi/2) per vertex (indexed like the opposite
    edges), the signed area, and a flag for flat real triangles."""

    cos: tuple
    sin: tuple
    tan_half: tuple
    area: complex
    degenerate: bool


def triangle_angles(t: TriangleLengths, area_sign: int = 1) -> TriangleAngles:
    """Angles from the law of cosines and the Heron formula.

    For complex lengths the area is area_sign * sqrt(s(s-l1)(s-l2)(s-l3))
    with the principal branch; flipping area_sign flips every sin and
    tan(phi/2).
    """
    l1, l2, l3 = t.l
    s = (l1 + l2 + l3) / 2
    area = area_sign * _csqrt(s * (s - l1) * (s - l2) * (s - l3))
    degenerate = area == 0
    cos, sin, tan_half = [], [], []
    for a in range(3):
        la = t.l[a]
        lb = t.l[(a + 1) % 3]
        lc = t.l[(a + 2) % 3]
        cos_a = (lb * lb + lc * lc - la * la) / (2 * lb * lc)
        sin_a = 2 * area / (lb * lc)
        if sin_a == 0:
            tan_a = 0.0 if cos_a == 1 else math.inf
        else:
            tan_a = (1 - cos_a) / sin_a
        cos.append(cos_a)
        sin.append(sin_a)
        tan_half.append(tan_a)
    return TriangleAngles(tuple(cos), tuple(sin), tuple(tan_half), area, degenerate)


def triangle_zeros(t: TriangleLengths, epsilon: int = 1) -> ZeroSet:
    """Roots of the theta-graph loop polynomial from (complex) triangle
    lengths: Y_a = i eps tan(phi_a/2) continued via

        Y_a^2 = -(s - l_b)(s - l_c) / (s (s - l_a)).

    Per-edge square roots take the principal branch and are then given a
    consistent relative sign so that every pair product Y_a Y_b matches
    its cycle target -(s - l_c)/s; eps flips the whole set.
    """
    l1, l2, l3 = t.l
    s = (l1 + l2 + l3) / 2
    if s == 0 or any(s - x == 0 for x in t.l):
        raise PoleError("parametrization pole: s or some s - l_a vanishes")
    candidates = []
    for a in range(3):
        la, lb, lc = t.l[a], t.l[(a + 1) % 3], t.l[(a + 2) % 3]
        candidates.append(1j * _csqrt((s - lb) * (s - lc) / (s * (s - la))))
    # relative signs from the pair targets L_ab = -(s - l_c)/s
    signs = [1, 1, 1]
    for b in (1, 2):
        c = 3 - b  # the remaining index; pair (0, b) has third edge c
        target = -(s - t.l[c]) / s
        prod = signs[0] * candidates[0] * candidates[b]
        signs[b] = 1 if abs(prod - target) <= abs(prod + target) else -1
    couplings = {a + 1: epsilon * signs[a] * candidates[a] for a in range(3)}
    return ZeroSet(THETA, couplings, TRIANGLE_ZEROS, epsilon=epsilon)


def cevian_zeros(a, b, c, o, phases: bool = True) -> ZeroSet:
    """Roots of the triangle loop polynomial from a real triangle (A, B, C)
    and a point O, via the cevians through O.

    Each coupling is minus the oriented ratio in which the cevian foot
    splits the opposite side, times (when ``phases`` is true) the phase of
    the oriented angle at O facing that side.  Ceva's theorem makes the
    ratio product 1 and the angles at O close up, so 1 + Y1 Y2 Y3 = 0.

    Equivalent constructions exist (a transversal line via Menelaus'
    theorem, or distance ratios OA:OB:OC); only the cevian ansatz is
    implemented.
    """
    pa, pb, pc, po = (complex(p[0], p[1]) for p in (a, b, c, o))

    def cross(u, v):
        return (u.conjugate() * v).imag

    def foot_ratio(vertex, side_start, side_end):
        d1 = po - vertex
        d2 = side_end - side_start
        denom = cross(d1, d2)
        if d1 == 0 or abs(denom) < 1e-14 * abs(d1) * abs(d2):
            raise DegenerateGeometryError("cevian parallel to the opposite side or O on a vertex")
        u = cross(side_start - vertex, d1) / denom
        if u == 0 or u == 1:
            # foot on a vertex: O lies on a line through two triangle vertices
            raise DegenerateGeometryError("cevian foot coincides with a triangle vertex")
        return u / (1 - u)

    def phase(u, v):
        return (v - po) / (u - po) / abs((v - po) / (u - po))

    ratios = (
        foot_ratio(pa, pb, pc),  # foot of the cevian from A on BC
        foot_ratio(pb, pc, pa),
        foot_ratio(pc, pa, pb),
    )
    if phases:
        turns = (phase(pb, pc), phase(pc, pa), phase(pa, pb))
    else:
        turns = (1.0, 1.0, 1.0)
    couplings = {i + 1: -turns[i] * ratios[i] for i in range(3)}
    return ZeroSet(TRIANGLE, couplings, CEVIAN)


# ---------------------------------------------------------------------------
# tetrahedron scalars
# ---------------------------------------------------------------------------

def cayley_menger_vsq(t: TetraLengths):
    """Squared volume as the degree-6 polynomial in the squared lengths.

    Valid for complex lengths; agrees with -(b^2 - 4ac)/9 for the
    quadratic coefficients below.
    """
    q = [x * x for x in t.l]
    q1, q2, q3, q4, q5, q6 = q
    bracket = (
        q1 * q4 * (q2 + q5 + q3 + q6 - q1 - q4)
        + q2 * q5 * (q1 + q4 + q3 + q6 - q2 - q5)
        + q3 * q6 * (q1 + q4 + q2 + q5 - q3 - q6)
        - (q1 * q2 * q3 + q3 * q4 * q5 + q1 * q5 * q6 + q2 * q6 * q4)
    )
    return bracket / 144


def quadratic_coeffs(t: TetraLengths):
    """Coefficients (a, b, c) of the quadratic fixing the auxiliary
    variable n of the cycle parametrization:

        a = (l1 l4 + l2 l5 + l3 l6)/2
        b = -a (sum_e l_e)/2 - (sum over dual faces of their length product)/4
        c = product of the dual-face semi-perimeters
    """
    l = t.l
    pairs = l[0] * l[3] + l[1] * l[4] + l[2] * l[5]
    a = pairs / 2
    face_prod_sum = 0
    c = 1
    for face in DUAL_FACES:
        prod = 1
        semi = 0
        for e in face:
            prod = prod * t.edge(e)
            semi = semi + t.edge(e)
        face_prod_sum = face_prod_sum + prod
        c = c * (semi / 2)
    b = -pairs * sum(l) / 4 - face_prod_sum / 4
    return a, b, c


def _semi(t: TetraLengths, edges) -> complex:
    return sum(t.edge(e) for e in edges) / 2


def cycle_variables(t: TetraLengths, root: str = "+"):
    """Auxiliary variable n and homogeneous cycle variables M_C.

    Returns (n, M) with M keyed by the cycles of the tetrahedron graph:
    M_t = n - s(opposite dual face) on 3-cycles, M_g = s(g) - n on
    4-cycles.  ``root`` picks the branch of the quadratic in n.
    """
    a, b, c = quadratic_coeffs(t)
    if a == 0:
        raise DegenerateGeometryError("quadratic in n degenerates (l1 l4 + l2 l5 + l3 l6 = 0)")
    disc = b * b - 4 * a * c
    sq = _csqrt(disc)
    if root == "+":
        n = (-b + sq) / (2 * a)
    elif root == "-":
        n = (-b - sq) / (2 * a)
    else:
        raise ValueError("root must be '+' or '-'")
    if n == 0:
        raise PoleError("parametrization pole: n = 0")
    m = {}
    for tri in TETRA_TRIANGLES:
        m[tri] = n - _semi(t, OPPOSITE_FACE[tri])
    for gamma in TETRA_FOUR_CYCLES:
        s_g = _semi(t, gamma)
        if s_g == n:
            raise PoleError("parametrization pole: n equals a 4-cycle semi-perimeter")
        m[gamma] = s_g - n
    return n, m


def pregeometric_zeros(t: TetraLengths, root: str = "+") -> ZeroSet:
    """Fisher zeros of the tetrahedron loop polynomial from six complex
    lengths, through the cycle variables.

    Per-edge squares

        (Y_e)^2 = - (n - s_{t1*(e)})(n - s_{t2*(e)}) / (n (s_{gamma(e)} - n))

    are rooted on the principal branch and then signed globally so that
    each cycle product matches its target L_C = -M_C / n; the sign vector
    is found by scanning all 64 assignments (the cycle constraints leave
    a gauge freedom, so the scan is over a small consistent family).
    The overall minus comes from Y_e^2 L_gamma = L_t1 L_t2 with each
    L_C = -M_C / n: two minus signs against one.

    On real lengths with positive squared volume, branch '+' reproduces
    geometric_zeros(t, epsilon=-1) edgewise and branch '-' the epsilon=+1
    set (swapping the branch conjugates every coupling).
    """
    n, m = cycle_variables(t, root)
    candidates = {}
    for e in range(1, 7):
        f1, f2 = FACES_AVOIDING_EDGE[e]
        num = (n - _semi(t, f1)) * (n - _semi(t, f2))
        den = n * (_semi(t, FOUR_CYCLE_AVOIDING[e]) - n)
        candidates[e] = _csqrt(-num / den)
    targets = {cyc: -mc / n for cyc, mc in m.items()}
    best_signs, best_score = None, None
    for signs in itertools.product((1, -1), repeat=6):
        score = 0.0
        for cyc, target in targets.items():
            prod = 1
            for e in cyc:
                prod = prod * signs[e - 1] * candidates[e]
            score += abs(prod - target) ** 2
        if best_score is None or score < best_score:
            best_signs, best_score = signs, score
    couplings = {e: best_signs[e - 1] * candidates[e] for e in range(1, 7)}
    return ZeroSet(TETRA, couplings, PREGEOMETRIC, branch=root)


# ---------------------------------------------------------------------------
# real geometric zeros
# ---------------------------------------------------------------------------

def require_euclidean(t: TetraLengths) -> float:
    if not t.is_real_positive():
        raise DegenerateGeometryError("geometric zeros need real positive lengths")
    for face in DUAL_FACES:
        s = _semi(t, face)
        for e in face:
            if s - t.edge(e) <= 0:
                raise DegenerateGeometryError(
                    f"face {face} violates the strict triangle inequality"
                )
    vsq = cayley_menger_vsq(t)
    # V^2 scales like length^6; treat anything within float noise of zero
    # as flat rather than misreading roundoff as a Lorentzian signature
    flat_tol = 1e-12 * max(abs(x) for x in t.l) ** 6
    if abs(vsq) <= flat_tol:
        raise FlatTetrahedronError("flat tetrahedron (zero volume)")
    if vsq < 0:
        raise LorentzianRegimeError(
            f"squared volume {vsq} < 0: no Euclidean tetrahedron with these lengths"
        )
    return vsq


def face_area(t: TetraLengths, face) -> float:
    s = _semi(t, face)
    prod = s
    for e in face:
        prod *= s - t.edge(e)
    return math.sqrt(prod)


def tan_half_opposite(t: TetraLengths, face, e: int):
    """tan(phi/2) for the angle opposite edge e inside the given face."""
    others = [x for x in face if x != e]
    s = _semi(t, face)
    return _csqrt(
        (s - t.edge(others[0])) * (s - t.edge(others[1])) / (s * (s - t.edge(e)))
    )


def _cos_between(t: TetraLengths, i: int, j: int) -> float:
    k = _PAIR_THIRD[frozenset((i, j))]
    li, lj, lk = t.edge(i), t.edge(j), t.edge(k)
    return (li * li + lj * lj - lk * lk) / (2 * li * lj)


def dihedral_cos(t: TetraLengths, e: int, star_index: int = 0) -> float:
    """Cosine of the external dihedral angle hinged at edge e, computed at
    one of the two dual vertices whose star contains e (both agree)."""
    stars = [s for s in TETRA_TRIANGLES if e in s]
    star = stars[star_index]
    x, y = (v for v in star if v != e)
    cos_ex = _cos_between(t, e, x)
    cos_ey = _cos_between(t, e, y)
    cos_xy = _cos_between(t, x, y)
    sin_ex = math.sqrt(max(0.0, 1 - cos_ex * cos_ex))
    sin_ey = math.sqrt(max(0.0, 1 - cos_ey * cos_ey))
    return (cos_ex * cos_ey - cos_xy) / (sin_ex * sin_ey)


def dihedral_angle(t: TetraLengths, e: int) -> float:
    """External dihedral angle at e in (0, pi), from its cosine and the
    volume formula sin(theta_e) = 3 l_e V / (2 A1 A2)."""
    vsq = cayley_menger_vsq(t)
    (face1, _, _), (face2, _, _) = FACES_AT_EDGE[e]
    sin_theta = 3 * t.edge(e) * math.sqrt(max(0.0, vsq)) / (
        2 * face_area(t, face1) * face_area(t, face2)
    )
    return math.atan2(sin_theta, dihedral_cos(t, e))


def geometric_zeros(t: TetraLengths, epsilon: int = 1) -> ZeroSet:
    """Fisher zeros of the tetrahedron loop polynomial for real lengths
    forming a Euclidean tetrahedron (all faces strict triangles, V^2 > 0):

        Y_e = exp(i eps theta_e / 2) sqrt(tan(phi1/2) tan(phi2/2))

    with phi1, phi2 the two face angles opposite e and theta_e the
    external dihedral angle at e.
    """
    require_euclidean(t)
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    couplings = {}
    for e in range(1, 7):
        (face1, _, _), (face2, _, _) = FACES_AT_EDGE[e]
        modulus = math.sqrt(
            tan_half_opposite(t, face1, e) * tan_half_opposite(t, face2, e)
        )
        cos_theta = min(1.0, max(-1.0, dihedral_cos(t, e)))
        half_cos = math.sqrt((1 + cos_theta) / 2)
        half_sin = math.sqrt((1 - cos_theta) / 2)
        couplings[e] = modulus * complex(half_cos, epsilon * half_sin)
    return ZeroSet(TETRA, couplings, GEOMETRIC, epsilon=epsilon)
