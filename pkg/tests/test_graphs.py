"""Graph construction, cycle enumeration and the duality map."""

import math
import random
from fractions import Fraction

import pytest

from tetraising.errors import CouplingError, PoleError, UnknownGraphError
from tetraising.graphs import (
    Graph,
    LoopPolynomial,
    TETRA,
    TETRA_DUAL,
    TETRA_FOUR_CYCLES,
    TETRA_TRIANGLES,
    TETRA_VERTEX_TRIADS,
    THETA,
    TRIANGLE,
    builtin_graph,
    duality_map,
    enumerate_cycles,
    eval_loop_polynomial,
    graph_from_json,
    graph_to_json,
    loop_polynomial_from_json,
    loop_polynomial_to_json,
)


@pytest.mark.parametrize(
    "name,vertices,edges,n_cycles",
    [(THETA, 2, 3, 4), (TRIANGLE, 3, 3, 2), (TETRA, 4, 6, 8), (TETRA_DUAL, 4, 6, 8)],
)
def test_builtin_shapes(name, vertices, edges, n_cycles):
    g = builtin_graph(name)
    assert g.vertex_count == vertices
    assert g.edge_count() == edges
    assert enumerate_cycles(g).cycle_count() == n_cycles


def test_unknown_graph():
    with pytest.raises(UnknownGraphError):
        builtin_graph("CUBE")


def test_theta_cycles():
    cycles = enumerate_cycles(builtin_graph(THETA)).cycles
    assert [sorted(c) for c in cycles] == [[], [1, 2], [1, 3], [2, 3]]


def test_triangle_cycles():
    cycles = enumerate_cycles(builtin_graph(TRIANGLE)).cycles
    assert [sorted(c) for c in cycles] == [[], [1, 2, 3]]


def test_tetra_cycles():
    cycles = enumerate_cycles(builtin_graph(TETRA)).cycles
    three = {tuple(sorted(c)) for c in cycles if len(c) == 3}
    four = {tuple(sorted(c)) for c in cycles if len(c) == 4}
    assert three == set(TETRA_TRIANGLES)
    assert four == set(TETRA_FOUR_CYCLES)


def test_tetra_vertex_stars_match_declared_triads():
    g = builtin_graph(TETRA)
    stars = {}
    for eid, a, b in g.edges:
        stars.setdefault(a, set()).add(eid)
        stars.setdefault(b, set()).add(eid)
    assert {tuple(sorted(s)) for s in stars.values()} == set(TETRA_VERTEX_TRIADS)


def test_dual_is_opposite_swap():
    dual = enumerate_cycles(builtin_graph(TETRA_DUAL)).cycles
    three = {tuple(sorted(c)) for c in dual if len(c) == 3}
    assert three == set(TETRA_VERTEX_TRIADS)
    assert {tuple(sorted(c)) for c in dual if len(c) == 4} == set(TETRA_FOUR_CYCLES)


def test_cycle_parity_invariant():
    for name in (THETA, TRIANGLE, TETRA, TETRA_DUAL):
        g = builtin_graph(name)
        incident = {v: set() for v in range(g.vertex_count)}
        for eid, a, b in g.edges:
            incident[a].add(eid)
            incident[b].add(eid)
        for cycle in enumerate_cycles(g).cycles:
            for v in range(g.vertex_count):
                assert len(cycle & incident[v]) % 2 == 0


def test_enumeration_deterministic():
    g = builtin_graph(TETRA)
    assert enumerate_cycles(g) == enumerate_cycles(g)


def test_edge_limit():
    vertices = 2
    edges = tuple((i, 0, 1) for i in range(1, 26))
    g = Graph("big", vertices, edges)
    with pytest.raises(ValueError, match="LoopPolynomial"):
        enumerate_cycles(g)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph("bad", 2, ((1, 0, 0),))  # self-loop
    with pytest.raises(ValueError):
        Graph("bad", 2, ((2, 0, 1),))  # id gap
    with pytest.raises(ValueError):
        Graph("bad", 1, ((1, 0, 1),))  # endpoint out of range


def test_eval_homogeneous_tetra():
    poly = enumerate_cycles(builtin_graph(TETRA))
    couplings = {e: Fraction(0) for e in range(1, 7)}
    assert eval_loop_polynomial(poly, couplings) == 1
    y = Fraction(2, 7)
    couplings = {e: y for e in range(1, 7)}
    assert eval_loop_polynomial(poly, couplings) == 1 + 4 * y**3 + 3 * y**4
    couplings = {e: Fraction(-1) for e in range(1, 7)}
    assert eval_loop_polynomial(poly, couplings) == 0


def test_eval_missing_coupling():
    poly = enumerate_cycles(builtin_graph(THETA))
    with pytest.raises(CouplingError):
        eval_loop_polynomial(poly, {1: 0.5, 2: 0.5})


def test_coefficient_overrides():
    poly = LoopPolynomial((frozenset(), frozenset((1, 2))), coefficients=(1, -1))
    assert eval_loop_polynomial(poly, {1: Fraction(1, 2), 2: Fraction(1, 3)}) == Fraction(5, 6)
    with pytest.raises(ValueError):
        LoopPolynomial((frozenset(),), coefficients=(1, 1))


def test_duality_map_endpoints():
    assert duality_map(Fraction(0)) == 1
    assert duality_map(Fraction(1)) == 0


def test_duality_map_fixed_point():
    y = -(1 + math.sqrt(2))
    assert duality_map(y) == pytest.approx(y, abs=1e-12)


def test_duality_map_complex_root():
    y = (1 + 1j * math.sqrt(2)) / 3
    expected = (1 - 1j * math.sqrt(2)) / 3
    assert abs(duality_map(y) - expected) < 1e-15


def test_duality_pole():
    with pytest.raises(PoleError):
        duality_map(Fraction(-1))


def test_duality_involution_and_product_rule_exact():
    rng = random.Random(0)
    for _ in range(50):
        y = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
        if y == -1 or y == 1:
            continue
        star = duality_map(y)
        assert duality_map(star) == y
        assert (1 + y) * (1 + star) == 2


def test_tetra_poly_invariant_under_triad_preserving_relabelings():
    poly = enumerate_cycles(builtin_graph(TETRA))
    rng = random.Random(3)
    couplings = {e: Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for e in range(1, 7)}
    base = eval_loop_polynomial(poly, couplings)
    # relabelings that permute the triangle set onto itself
    perms = [
        {1: 2, 2: 1, 3: 3, 4: 5, 5: 4, 6: 6},
        {1: 3, 2: 2, 3: 1, 4: 6, 5: 5, 6: 4},
        {1: 1, 2: 5, 3: 6, 4: 4, 5: 2, 6: 3},
    ]
    triangles = set(TETRA_TRIANGLES)
    for perm in perms:
        mapped = {tuple(sorted(perm[e] for e in tri)) for tri in triangles}
        assert mapped == triangles
        permuted = {perm[e]: couplings[e] for e in range(1, 7)}
        assert eval_loop_polynomial(poly, permuted) == base


def test_serialization_round_trip():
    g = builtin_graph(TETRA)
    assert graph_from_json(graph_to_json(g)) == g
    poly = enumerate_cycles(g)
    assert loop_polynomial_from_json(loop_polynomial_to_json(poly)) == poly
