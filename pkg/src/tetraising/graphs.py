"""Finite multigraphs, even subgraphs and loop polynomials.

The high-temperature expansion of the Ising partition function on a graph
reduces to the loop polynomial

    P[{Y_e}] = sum over even subgraphs C of  prod_{e in C} Y_e,

where an even subgraph is an edge subset meeting every vertex an even
number of times.  This module holds the built-in graphs (theta graph,
triangle, tetrahedron and its dual), even-subgraph enumeration, loop
polynomial evaluation, and the high/low-temperature duality map on a
single coupling.

Edge labeling conventions (used consistently across the package):

* tetrahedron: opposite edge pairs (1,4), (2,5), (3,6); the four 3-cycles
  are {1,2,6}, {1,3,5}, {2,3,4}, {4,5,6}; the three 4-cycles are
  {1,2,4,5}, {2,3,5,6}, {1,3,4,6}; the four vertex stars are {1,2,3},
  {1,5,6}, {2,4,6}, {3,4,5}.
* dual tetrahedron: the same graph with labels swapped along opposite
  pairs (1<->4, 2<->5, 3<->6); its 3-cycles are the tetrahedron's vertex
  stars and vice versa, while the 4-cycles are shared.

All functions here are pure; evaluation is generic in the scalar type, so
`fractions.Fraction` couplings give exact rational results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import CouplingError, PoleError, UnknownGraphError

# Enumeration is brute force over 2^E edge subsets; keep it at desk scale.
EDGE_LIMIT = 24

THETA = "THETA"
TRIANGLE = "TRIANGLE"
TETRA = "TETRA"
TETRA_DUAL = "TETRA_DUAL"

BUILTIN_NAMES = (THETA, TRIANGLE, TETRA, TETRA_DUAL)

#: opposite-edge involution on the tetrahedron labels
OPPOSITE_EDGE = {1: 4, 2: 5, 3: 6, 4: 1, 5: 2, 6: 3}

#: 3-cycles (triangles) of TETRA, matching the loop-polynomial monomials
TETRA_TRIANGLES = ((1, 2, 6), (1, 3, 5), (2, 3, 4), (4, 5, 6))

#: 4-cycles of TETRA (and of TETRA_DUAL: they are invariant under the swap)
TETRA_FOUR_CYCLES = ((1, 2, 4, 5), (2, 3, 5, 6), (1, 3, 4, 6))

#: edge triads meeting at the four vertices of TETRA; these are at the same
#: time the triangles of TETRA_DUAL, i.e. the faces of the dual tetrahedron
TETRA_VERTEX_TRIADS = ((1, 2, 3), (1, 5, 6), (2, 4, 6), (3, 4, 5))

#: dual graph of each built-in under the planar duality used in the text
DUAL_OF = {THETA: TRIANGLE, TRIANGLE: THETA, TETRA: TETRA_DUAL, TETRA_DUAL: TETRA}


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph with edges labeled 1..E.

    Edges are (edge_id, endpoint_a, endpoint_b) triples with vertex indices
    in range(vertex_count).  Self-loops are rejected; edge ids must be the
    consecutive integers 1..E.
    """

    name: str
    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        ids = sorted(e[0] for e in self.edges)
        if ids != list(range(1, len(self.edges) + 1)):
            raise ValueError(f"edge ids must be 1..{len(self.edges)} without gaps, got {ids}")
        for eid, a, b in self.edges:
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge {eid} has endpoint outside 0..{self.vertex_count - 1}")
            if a == b:
                raise ValueError(f"edge {eid} is a self-loop")

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e[0] for e in self.edges)

    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class LoopPolynomial:
    """All even subgraphs of a graph, the empty one included.

    Evaluating the polynomial on couplings {Y_e} sums, over the stored
    cycles, the product of the couplings on each cycle; the empty cycle
    contributes the constant term 1.  The built-in graphs carry +1 on
    every monomial; for other graphs the correct signs depend on an edge
    orientation that this package does not compute, so `coefficients`
    may be supplied explicitly (parallel to `cycles`) instead.
    """

    cycles: tuple[frozenset[int], ...]
    coefficients: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.coefficients is not None and len(self.coefficients) != len(self.cycles):
            raise ValueError("coefficients must match cycles one to one")

    def cycle_count(self) -> int:
        return len(self.cycles)


def builtin_graph(name: str) -> Graph:
    """Return one of the built-in graphs THETA, TRIANGLE, TETRA, TETRA_DUAL."""
    if name == THETA:
        return Graph(THETA, 2, ((1, 0, 1), (2, 0, 1), (3, 0, 1)))
    if name == TRIANGLE:
        return Graph(TRIANGLE, 3, ((1, 0, 1), (2, 1, 2), (3, 2, 0)))
    if name == TETRA:
        # Vertices 0..3; stars are {1,5,6}, {1,2,3}, {2,4,6}, {3,4,5} so that
        # the triangles come out as TETRA_TRIANGLES above.
        return Graph(
            TETRA,
            4,
            ((1, 0, 1), (2, 1, 2), (3, 1, 3), (4, 2, 3), (5, 0, 3), (6, 0, 2)),
        )
    if name == TETRA_DUAL:
        tetra = builtin_graph(TETRA)
        swapped = tuple(
            sorted((OPPOSITE_EDGE[eid], a, b) for eid, a, b in tetra.edges)
        )
        return Graph(TETRA_DUAL, 4, swapped)
    raise UnknownGraphError(f"unknown graph {name!r}; choose from {BUILTIN_NAMES}")


def enumerate_cycles(g: Graph) -> LoopPolynomial:
    """Enumerate all even subgraphs of ``g`` by brute force over edge subsets.

    The result is deterministically ordered by cycle size, then
    lexicographically by sorted edge ids.  Graphs with more than
    ``EDGE_LIMIT`` edges are rejected; build a LoopPolynomial explicitly
    from known cycles in that case.
    """
    n_edges = g.edge_count()
    if n_edges > EDGE_LIMIT:
        raise ValueError(
            f"{n_edges} edges exceeds the enumeration limit of {EDGE_LIMIT}; "
            "construct LoopPolynomial(cycles=...) explicitly instead"
        )
    # bitmask of incident edge positions per vertex
    incidence = [0] * g.vertex_count
    positions = {}
    for pos, (eid, a, b) in enumerate(g.edges):
        positions[pos] = eid
        incidence[a] ^= 1 << pos
        incidence[b] ^= 1 << pos

    found = []
    for mask in range(1 << n_edges):
        if all((mask & inc).bit_count() % 2 == 0 for inc in incidence):
            edge_set = frozenset(
                positions[pos] for pos in range(n_edges) if mask >> pos & 1
            )
            found.append(edge_set)
    found.sort(key=lambda c: (len(c), sorted(c)))
    return LoopPolynomial(tuple(found))


def eval_loop_polynomial(p: LoopPolynomial, couplings: Mapping[int, object]):
    """Evaluate sum_C prod_{e in C} Y_e.

    Generic in the coupling type: complex, float and Fraction all work (the
    latter exactly).
    """
    needed = frozenset().union(*p.cycles) if p.cycles else frozenset()
    missing = needed - couplings.keys()
    if missing:
        raise CouplingError(f"missing couplings for edges {sorted(missing)}")
    coeffs = p.coefficients or (1,) * len(p.cycles)
    total = 0
    for cycle, coeff in zip(p.cycles, coeffs):
        term = coeff
        for eid in cycle:
            term = term * couplings[eid]
        total = total + term
    return total


def duality_map(y):
    """High/low temperature duality involution D(Y) = (1 - Y)/(1 + Y)."""
    if y == -1:
        raise PoleError("duality map has a pole at Y = -1")
    return (1 - y) / (1 + y)


def dual_couplings(couplings: Mapping[int, object]) -> dict[int, object]:
    """Apply the duality map edgewise."""
    return {eid: duality_map(y) for eid, y in couplings.items()}


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def graph_to_json(g: Graph) -> dict:
    return {
        "name": g.name,
        "vertex_count": g.vertex_count,
        "edges": [[eid, a, b] for eid, a, b in g.edges],
    }


def graph_from_json(obj: dict) -> Graph:
    return Graph(
        obj.get("name", ""),
        int(obj["vertex_count"]),
        tuple((int(e[0]), int(e[1]), int(e[2])) for e in obj["edges"]),
    )


def loop_polynomial_to_json(p: LoopPolynomial) -> list[list[int]]:
    return [sorted(c) for c in p.cycles]


def loop_polynomial_from_json(obj: Sequence[Sequence[int]]) -> LoopPolynomial:
    cycles = tuple(frozenset(int(e) for e in c) for c in obj)
    return LoopPolynomial(cycles)
