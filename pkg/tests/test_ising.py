"""Partition functions and the duality identities, exact over rationals."""

import random
from fractions import Fraction

import pytest

from tetraising.errors import CouplingError, DegenerateGeometryError, PoleError
from tetraising.graphs import (
    TETRA,
    TETRA_DUAL,
    THETA,
    TRIANGLE,
    builtin_graph,
    dual_couplings,
    enumerate_cycles,
    eval_loop_polynomial,
)
from tetraising.ising import (
    check_high_temp,
    check_low_temp,
    check_westbury,
    duality_on_p_residuals,
    ising_partition,
    pachner_reduce,
    scissor_transform,
    self_duality_residual,
)
from tetraising import sampling

TETRA_G = builtin_graph(TETRA)
THETA_G = builtin_graph(THETA)
TETRA_POLY = enumerate_cycles(TETRA_G)
THETA_POLY = enumerate_cycles(THETA_G)


def test_partition_at_zero_coupling():
    assert ising_partition(TETRA_G, {e: 0.0 for e in range(1, 7)}) == 16
    assert ising_partition(THETA_G, {e: 0.0 for e in range(1, 4)}) == 4


def test_partition_exact_hyperbolic():
    pairs = {e: (Fraction(5, 4), Fraction(3, 4)) for e in range(1, 4)}
    assert ising_partition(THETA_G, pairs) == Fraction(65, 4)


def test_partition_rejects_bad_pair():
    with pytest.raises(CouplingError):
        ising_partition(THETA_G, {1: (Fraction(1), Fraction(1)), 2: 0.0, 3: 0.0})


def test_partition_global_flip_symmetry():
    rng = random.Random(11)
    pairs = sampling.hyperbolic_couplings(rng, TETRA_G.edge_ids)
    full = ising_partition(TETRA_G, pairs)
    # restrict to configurations with the first spin up, then double
    w_plus = {e: c + s for e, (c, s) in pairs.items()}
    w_minus = {e: c - s for e, (c, s) in pairs.items()}
    half = 0
    for config in range(1 << (TETRA_G.vertex_count - 1)):
        config <<= 1  # vertex 0 fixed to sigma = +
        term = 1
        for eid, a, b in TETRA_G.edges:
            aligned = ((config >> a) & 1) == ((config >> b) & 1)
            term *= w_plus[eid] if aligned else w_minus[eid]
        half += term
    assert 2 * half == full


@pytest.mark.parametrize("name", [THETA, TRIANGLE, TETRA, TETRA_DUAL])
def test_high_temp_exact(name):
    g = builtin_graph(name)
    rng = random.Random(hash(name) & 0xFFFF)
    for _ in range(10):
        pairs = sampling.hyperbolic_couplings(rng, g.edge_ids)
        assert check_high_temp(g, pairs) == 0


def test_high_temp_zero_coupling():
    pairs = {e: (Fraction(1), Fraction(0)) for e in range(1, 7)}
    assert check_high_temp(TETRA_G, pairs) == 0


@pytest.mark.parametrize("name", [THETA, TRIANGLE, TETRA, TETRA_DUAL])
def test_low_temp_exact(name):
    g = builtin_graph(name)
    rng = random.Random(len(name))
    for _ in range(10):
        q = sampling.positive_rational_couplings(rng, g.edge_ids)
        assert check_low_temp(g, q) == 0


def test_westbury_trivial_and_exact():
    assert check_westbury(TETRA_G, {e: Fraction(0) for e in range(1, 7)}) == 0
    assert check_westbury(TETRA_G, {e: Fraction(3, 5) for e in range(1, 7)}) == 0
    assert check_westbury(
        THETA_G, {1: Fraction(1, 3), 2: Fraction(1, 5), 3: Fraction(1, 7)}
    ) == 0


def test_westbury_random_exact():
    rng = random.Random(2)
    for g in (THETA_G, TETRA_G):
        done = 0
        while done < 10:
            y = sampling.rational_couplings(rng, g.edge_ids)
            poly = THETA_POLY if g is THETA_G else TETRA_POLY
            if eval_loop_polynomial(poly, y) == 0:
                continue
            assert check_westbury(g, y) == 0
            done += 1


def test_westbury_pole_at_fisher_zero():
    with pytest.raises(PoleError):
        check_westbury(TETRA_G, {e: Fraction(-1) for e in range(1, 7)})


@pytest.mark.parametrize("name", [THETA, TRIANGLE, TETRA, TETRA_DUAL])
def test_duality_on_p_both_directions(name):
    g = builtin_graph(name)
    rng = random.Random(len(name) * 7)
    for _ in range(10):
        y = sampling.rational_couplings(rng, g.edge_ids)
        forward, backward = duality_on_p_residuals(g, y)
        assert forward == 0
        assert backward == 0


def test_self_duality_endpoints():
    assert self_duality_residual({e: Fraction(0) for e in range(1, 7)}) == 0
    assert self_duality_residual({e: Fraction(1) for e in range(1, 7)}) == 0


def test_self_duality_random_exact():
    rng = random.Random(13)
    for _ in range(20):
        y = sampling.rational_couplings(rng, range(1, 7))
        assert self_duality_residual(y) == 0


def test_self_duality_pole():
    y = {e: Fraction(0) for e in range(1, 7)}
    y[3] = Fraction(-1)
    with pytest.raises(PoleError):
        self_duality_residual(y)


def test_dual_of_fisher_zero_annihilates_dual_polynomial():
    from tetraising.geometry import TetraLengths, geometric_zeros

    dual_poly = enumerate_cycles(builtin_graph(TETRA_DUAL))
    rng = random.Random(4)
    for _ in range(5):
        t = sampling.euclidean_tetra(rng)
        for eps in (1, -1):
            z = geometric_zeros(t, eps)
            value = eval_loop_polynomial(dual_poly, dual_couplings(z.couplings))
            assert abs(value) < 1e-10


# ---------------------------------------------------------------------------
# Pachner reduction and scissor symmetry
# ---------------------------------------------------------------------------

def _pachner_residual(couplings):
    factor, reduced = pachner_reduce(couplings)
    p_t = complex(eval_loop_polynomial(TETRA_POLY, {e: complex(v) for e, v in couplings.items()}))
    p_theta = eval_loop_polynomial(THETA_POLY, reduced)
    return abs(p_t - factor * p_theta) / abs(p_t)


def test_pachner_unit_triangle():
    couplings = {1: 0.3, 2: -0.2, 3: 0.7, 4: 1.0, 5: 1.0, 6: 1.0}
    factor, reduced = pachner_reduce(couplings)
    assert factor == pytest.approx(2)
    for e in (1, 2, 3):
        assert reduced[e] == pytest.approx(couplings[e], abs=1e-14)


def test_pachner_erased_legs():
    couplings = {1: 0.0, 2: 0.0, 3: 0.0, 4: 0.4, 5: 0.9, 6: -0.2}
    factor, reduced = pachner_reduce(couplings)
    assert factor == pytest.approx(1 + 0.4 * 0.9 * (-0.2))
    p_t = eval_loop_polynomial(TETRA_POLY, couplings)
    assert p_t == pytest.approx(factor)
    assert all(abs(reduced[e]) < 1e-14 for e in (1, 2, 3))


def test_pachner_random_positive():
    rng = random.Random(21)
    for _ in range(25):
        couplings = {e: float(f) for e, f in
                     sampling.positive_rational_couplings(rng, range(1, 7)).items()}
        assert _pachner_residual(couplings) < 1e-12


def test_pachner_degenerate():
    couplings = {1: 0.5, 2: 0.5, 3: 0.5, 4: 1.0, 5: 1.0, 6: -1.0}
    with pytest.raises(DegenerateGeometryError):
        pachner_reduce(couplings)  # 1 + Y4 Y5 Y6 = 0


def test_scissor_fixed_point_and_example():
    couplings = {e: 0.8 for e in range(1, 7)}
    out = scissor_transform(couplings)
    for e in range(1, 7):
        assert out[e] == pytest.approx(0.8)
    couplings = {1: 1.0, 2: 2.0, 3: 3.0, 4: 1.0, 5: 5.0, 6: 7.0}
    out = scissor_transform(couplings)
    root210 = (2 * 3 * 5 * 7) ** 0.5
    assert out[2] == pytest.approx(root210 / 2)
    assert out[3] == pytest.approx(root210 / 3)
    assert out[5] == pytest.approx(root210 / 5)
    assert out[6] == pytest.approx(root210 / 7)


def test_scissor_invariance_random():
    rng = random.Random(8)
    for _ in range(25):
        couplings = {e: float(f) for e, f in
                     sampling.positive_rational_couplings(rng, range(1, 7)).items()}
        before = eval_loop_polynomial(TETRA_POLY, couplings)
        after = eval_loop_polynomial(TETRA_POLY, scissor_transform(couplings))
        assert abs(before - after) / abs(before) < 1e-12


def test_scissor_involution():
    rng = random.Random(9)
    couplings = {e: rng.uniform(0.1, 2.0) for e in range(1, 7)}
    twice = scissor_transform(scissor_transform(couplings))
    for e in range(1, 7):
        assert twice[e] == pytest.approx(couplings[e], rel=1e-12)


def test_scissor_zero_product():
    couplings = {1: 1.0, 2: 0.0, 3: 1.0, 4: 1.0, 5: 1.0, 6: 1.0}
    with pytest.raises(CouplingError):
        scissor_transform(couplings)
