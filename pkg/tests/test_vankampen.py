import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from embeddability.equivariant import deleted_product
from embeddability.exactalg import AbelianGroup
from embeddability.geometry import Degenerate
from embeddability.obstructions.vankampen import (
    Verdict,
    geometric_cocycle,
    h2n_direct,
    h2n_presentation,
    moment_coordinates,
    moment_curve_cocycle,
    panelled_cone_obstruction,
    sarkaria_example,
    van_kampen,
)
from embeddability.simplicial import SimplicialComplex, skeleton

from conftest import graph_complex, random_complex, random_planar_graphs, random_trees

K4, K5 = skeleton(3, 1), skeleton(4, 1)
K33 = graph_complex([(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])
Z2 = AbelianGroup(0, (2,))


def random_coordinates(K, dim, rng):
    return {v: tuple(rng.randint(-50, 50) for _ in range(dim)) for v in K.vertices()}


def generic_geometric_cocycle(K, rng, E=None):
    for _ in range(50):
        try:
            return geometric_cocycle(K, random_coordinates(K, 2 * K.dimension, rng), E)
        except Degenerate:
            continue
    raise RuntimeError("no generic coordinates found")


def test_alternation_pattern():
    c = moment_curve_cocycle(K5, {v: v for v in range(1, 6)})
    sup = c.support()
    assert abs(sup[((1, 3), (2, 4))]) == 1
    assert ((1, 2), (3, 4)) not in sup and ((3, 4), (1, 2)) not in sup


def test_moment_cocycle_closed_on_flores_complex():
    K = skeleton(6, 2)
    c = moment_curve_cocycle(K, {v: v for v in K.vertices()})
    assert c.space.is_cycle(c)


@pytest.mark.parametrize("K", [K5, K33, skeleton(6, 2)], ids=["k5", "k33", "flores2"])
def test_geometric_matches_moment_cellwise(K):
    E = deleted_product(K)
    assert geometric_cocycle(K, moment_coordinates(K), E).values == moment_curve_cocycle(K, E=E).values


@pytest.mark.parametrize("n", [1, 2, 3])
def test_geometric_matches_moment_for_random_orders(n):
    rng = random.Random(n)
    K = skeleton(2 * n + 1, n) if n < 3 else random_complex(rng, 8, 3, 6)
    E = deleted_product(K)
    for _ in range(3):
        verts = K.vertices()
        order = dict(zip(verts, rng.sample(range(1, 40), len(verts))))
        assert (geometric_cocycle(K, moment_coordinates(K, order), E).values
                == moment_curve_cocycle(K, order, E).values)


def test_disjoint_edges_have_zero_cochain():
    K = graph_complex([(1, 2), (3, 4)])
    c = geometric_cocycle(K, {1: (0, 0), 2: (1, 0), 3: (0, 1), 4: (2, 3)})
    assert c.is_zero_chain()


def test_k4_generic_coordinates_trivial():
    rng = random.Random(4)
    c = generic_geometric_cocycle(K4, rng)
    assert c.space.class_order(c) == 1


def test_trees_trivial():
    for T in random_trees(10, seed=3):
        r = van_kampen(T)
        assert r.trivial and r.verdict is Verdict.EMBEDS
        assert h2n_presentation(T).is_trivial()


def test_k5_and_k33():
    for K in (K5, K33):
        r = van_kampen(K)
        assert not r.trivial and r.order == 2 and r.verdict is Verdict.DOES_NOT_EMBED
        assert h2n_presentation(K) == Z2 == h2n_direct(K)


def test_k4():
    r = van_kampen(K4)
    assert r.trivial and r.verdict is Verdict.EMBEDS


def test_flores_complex_mod2():
    r = van_kampen(skeleton(6, 2))
    assert not r.trivial and not r.mod2_trivial


def test_two_dimensional_trivial_is_unknown():
    r = van_kampen(SimplicialComplex.from_facets([(1, 2, 3)]))
    assert r.trivial and r.verdict is Verdict.UNKNOWN


def test_point():
    r = van_kampen(SimplicialComplex.from_facets([(1,)]))
    assert r.trivial and r.verdict is Verdict.EMBEDS
    assert r.to_json()["order"] == 1


def test_sarkaria_shape():
    X = sarkaria_example()
    assert X.dimension == 2
    assert all(f in X for s in X.simplices() for f in combinations(s, len(s) - 1) if f)


def test_panelled_cone():
    r = panelled_cone_obstruction(K5)
    assert r.extra["co_index"] == 3 and r.verdict is Verdict.NOT_PANELLED
    assert panelled_cone_obstruction(SimplicialComplex.from_facets([(1, 2)])).extra["co_index"] == 1
    assert panelled_cone_obstruction(K33).extra["co_index"] == 3
    assert panelled_cone_obstruction(K4).verdict is Verdict.PANELLED


# --------------------------------------------------------------- properties


@st.composite
def graphs(draw):
    rng = random.Random(draw(st.integers(0, 10**6)))
    n = rng.randint(3, 6)
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.6]
    return graph_complex(edges, range(1, n + 1)) if edges else graph_complex([(1, 2)])


@given(graphs())
def test_presentation_matches_direct_on_graphs(K):
    assert h2n_presentation(K) == h2n_direct(K)


@given(graphs())
def test_obstruction_order_divides_two(K):
    r = van_kampen(K)
    assert r.order in (1, 2)
    assert r.trivial == (r.order == 1)


@given(graphs(), st.randoms(use_true_random=False))
def test_invariant_under_relabelling(K, rnd):
    verts = K.vertices()
    perm = dict(zip(verts, rnd.sample(range(100, 200), len(verts))))
    a, b = van_kampen(K), van_kampen(K.relabel(perm))
    assert (a.trivial, a.order) == (b.trivial, b.order)


@given(graphs(), st.data())
def test_invariant_under_edge_subdivision(K, data):
    e = data.draw(st.sampled_from(K.simplices(1)))
    a, b = van_kampen(K), van_kampen(K.stellar_subdivision(e, 1000))
    assert (a.trivial, a.order) == (b.trivial, b.order)


def test_random_generic_coordinates_cohomologous():
    rng = random.Random(11)
    for K in (K5, K33):
        E = deleted_product(K)
        m = moment_curve_cocycle(K, E=E)
        for _ in range(3):
            g = generic_geometric_cocycle(K, rng, E)
            assert E.class_order(g - m) == 1


def test_random_planar_graphs_embed():
    for G in random_planar_graphs(5, seed=7):
        assert van_kampen(G).verdict is Verdict.EMBEDS
