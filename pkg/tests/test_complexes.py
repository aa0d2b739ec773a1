import random

import pytest

from chromhom.algebra import make_deformed, make_truncated
from chromhom.chromatic import Poly, qdim_poly
from chromhom.complexes import (
    Cube,
    EnhancedState,
    differential,
    dump_slice,
    enumerate_basis,
    per_edge_image,
    slice_dimension,
)
from chromhom.graph import Graph, components, cycle

P3 = cycle(3)
A2 = make_truncated(2)


def test_enumerate_counts_match_examples():
    assert len(enumerate_basis(P3, A2, 0, 3)) == 1
    assert enumerate_basis(P3, A2, 0, 3).states[0] == EnhancedState(0, (1, 1, 1))
    assert len(enumerate_basis(P3, A2, 0, 2)) == 3
    assert len(enumerate_basis(P3, A2, 5, 1)) == 0


def test_enumerate_order_is_lexicographic():
    basis = enumerate_basis(P3, A2, 1, 1)
    pairs = [(s.subset, s.coloring) for s in basis.states]
    assert pairs == sorted(pairs)


def test_counts_match_counting_polynomial():
    # dim C^{i,j} is the q^j coefficient of sum over i-subsets of qdim^c(s)
    g = Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))
    a = make_truncated(3)
    qd = qdim_poly(a)
    for i in range(g.edge_count + 1):
        expected = Poly()
        for mask in range(1 << g.edge_count):
            if mask.bit_count() == i:
                expected = expected + qd ** components(g, mask).component_count
        for j in range(10):
            assert slice_dimension(g, a, i, j) == expected.coeff(j)
            assert len(enumerate_basis(g, a, i, j)) == expected.coeff(j)


def test_per_edge_image_identity_on_cycle_closing():
    state = EnhancedState(0b011, (1,))
    [(target, coeff)] = per_edge_image(P3, A2, state, 2)
    assert target == EnhancedState(0b111, (1,)) and coeff == 1


def test_per_edge_image_merges_with_product():
    # colors (1, x, x); adding edge 0 merges components {0} and {1}: 1*x = x
    state = EnhancedState(0, (0, 1, 1))
    [(target, coeff)] = per_edge_image(P3, A2, state, 0)
    assert target == EnhancedState(0b001, (1, 1)) and coeff == 1
    # both colored x: x*x = 0, empty combination
    state = EnhancedState(0, (1, 1, 0))
    assert per_edge_image(P3, A2, state, 0) == []


def test_per_edge_image_rejects_present_edge():
    with pytest.raises(ValueError):
        per_edge_image(P3, A2, EnhancedState(0b001, (0, 0)), 0)


def test_per_edge_image_deformed_coefficients():
    alg = make_deformed([-2, -3, 1])  # x^2 = 2 + 3x
    g = Graph(2, ((0, 1),))
    state = EnhancedState(0, (1, 1))
    terms = per_edge_image(g, alg, state, 0)
    assert terms == [
        (EnhancedState(1, (0,)), 2),
        (EnhancedState(1, (1,)), 3),
    ]


def test_triangle_d02_matrix_is_the_displayed_one():
    # Each source state (one vertex colored 1) maps to the two one-edge
    # states whose edge touches that vertex, all coefficients +1.
    mat = differential(P3, A2, 0, 2)
    assert (mat.rows, mat.cols) == (3, 3)
    assert mat.triplets() == [
        (0, 0, 1), (0, 1, 1), (1, 1, 1), (1, 2, 1), (2, 0, 1), (2, 2, 1),
    ]


def test_sign_flip_on_second_edge():
    # source: one edge present (e_0), adding e_1 has one set bit below it
    basis = enumerate_basis(P3, A2, 1, 2)
    mat = differential(P3, A2, 1, 2)
    src = basis.index[EnhancedState(0b001, (1, 1))]
    dst_basis = enumerate_basis(P3, A2, 2, 2)
    dst = dst_basis.index.get(EnhancedState(0b011, (1,)))
    if dst is not None:
        assert mat.entries.get((dst, src), 0) <= 0


def test_dd_zero_random():
    rng = random.Random(3)
    for _ in range(25):
        v = rng.randint(1, 5)
        g = Graph(
            v, tuple((rng.randrange(v), rng.randrange(v)) for _ in range(rng.randint(0, 7)))
        )
        a = rng.choice([A2, make_truncated(3), make_deformed([-1, -1, 1])])
        cube = Cube(g, a)
        jmax = a.max_degree * v if a.graded else 0
        for j in range(jmax + 1):
            for i in range(g.edge_count):
                d1 = differential(g, a, i, j, cube)
                d2 = differential(g, a, i + 1, j, cube)
                assert d2.compose(d1).is_zero(), (g, a.spec, i, j)


def test_degree_preservation():
    a = make_truncated(4)
    g = cycle(4)
    cube = Cube(g, a)
    rng = random.Random(1)
    for _ in range(60):
        i = rng.randint(0, 3)
        j = rng.randint(0, 10)
        basis = enumerate_basis(g, a, i, j, cube)
        if not basis.states:
            continue
        state = rng.choice(basis.states)
        absent = [e for e in range(4) if not state.subset >> e & 1]
        e = rng.choice(absent)
        for target, _coeff in per_edge_image(g, a, state, e):
            assert sum(a.degrees[c] for c in target.coloring) == j


def test_edge_cap():
    g = Graph(65, tuple((i, i + 1) for i in range(64)))
    with pytest.raises(ValueError):
        Cube(g, A2)


def test_dump_slice_format():
    text = dump_slice(P3, A2, 0, 2)
    assert "state#0: subset=0b000, colors=[0, 1, 1]" in text
    assert "(0, 0, 1)" in text
