import random
from math import inf

import pytest
from hypothesis import given, strategies as st

from embeddability.chords.config import theta0
from embeddability.chords.diagram import parse_diagram
from embeddability.equivariant import (
    TWISTED,
    UNTWISTED,
    GroupAction,
    co_index,
    deleted_product,
    euler_power,
    from_simplicial_involution,
    involution_on_homology,
    opposite,
    relative_deleted_product,
    smith_connecting_cohomology,
    smith_connecting_homology,
    yang_index,
    z2_group_cohomology,
)
from embeddability.exactalg import AbelianGroup, IntMatrix, integer_kernel, solve_integer
from embeddability.simplicial import SimplicialComplex, cone, skeleton

from conftest import random_complex

Z = AbelianGroup(1, ())
Z2 = AbelianGroup(0, (2,))
K5 = skeleton(4, 1)


def octahedron():
    """Boundary of the octahedron with the antipodal involution."""
    facets = [(a, b, c) for a in (1, 4) for b in (2, 5) for c in (3, 6)]
    K = SimplicialComplex.from_facets([tuple(sorted(f)) for f in facets])
    return from_simplicial_involution(K, {1: 4, 4: 1, 2: 5, 5: 2, 3: 6, 6: 3})


def trivial_cover():
    """Two disjoint edges swapped by the involution."""
    K = SimplicialComplex.from_facets([(1, 2), (3, 4)])
    return from_simplicial_involution(K, {1: 3, 3: 1, 2: 4, 4: 2})


@st.composite
def small_complexes(draw):
    rng = random.Random(draw(st.integers(0, 10**6)))
    n = rng.randint(4, 6)
    return random_complex(rng, n, rng.randint(1, 2), rng.randint(2, 6))


def test_deleted_product_of_edge():
    E = deleted_product(SimplicialComplex.from_facets([(0, 1)]))
    assert E.count(0) == 2 and E.dimension == 0
    assert E.involution(0, 0) == (1, 1)


def test_deleted_product_of_circle():
    E = deleted_product(skeleton(2, 1))
    assert E.size() == 12 and E.euler_characteristic() == 0
    assert E.homology(1) == Z
    assert E.twisted_cohomology(1, TWISTED) == Z2
    assert E.twisted_cohomology(1, UNTWISTED) == Z


def test_deleted_product_of_k5():
    E = deleted_product(K5)
    assert [E.count(d) for d in (0, 1, 2)] == [20, 60, 30]
    assert E.euler_characteristic() == -10
    assert E.twisted_cohomology(2, UNTWISTED) == Z2


def test_relative_deleted_product():
    assert relative_deleted_product(K5, K5).cells(2) == deleted_product(K5).cells(2)
    pts = SimplicialComplex.from_facets([(0,), (1,)])
    E = relative_deleted_product(pts, SimplicialComplex.from_facets([(0, 1)]))
    assert E.size() == 2 and E.count(0) == 2
    assert co_index(relative_deleted_product(K5, cone(K5))) == 3


def test_untwisted_degree_zero():
    E = deleted_product(SimplicialComplex.from_facets([(0, 1)]))
    assert E.twisted_cohomology(0, UNTWISTED) == Z


def test_connecting_cohomology_on_circle():
    E = deleted_product(skeleton(2, 1))
    e = smith_connecting_cohomology(E, E.unit())
    assert e.parity == TWISTED and e.degree == 1
    assert E.class_order(e) == 2


def test_trivial_cover_kills_everything():
    E = trivial_cover()
    assert E.class_order(euler_power(E, 1)) == 1
    for vec in integer_kernel(E.quotient_boundary(1, UNTWISTED)) + [[0] * len(E.reps(1))]:
        z = E.chain(1, UNTWISTED, vec)
        assert E.class_order(smith_connecting_homology(E, z)) == 1


def test_cap_fundamental_class_of_circle_quotient():
    E = deleted_product(skeleton(2, 1))
    (vec,) = integer_kernel(E.quotient_boundary(1, UNTWISTED))
    z = E.chain(1, UNTWISTED, vec)
    w = smith_connecting_homology(E, z)
    assert w.parity == TWISTED and E.class_order(w) == 2
    assert E.twisted_homology(0, TWISTED) == Z2


def test_euler_powers():
    E = deleted_product(K5)
    assert E.class_order(euler_power(E, 0)) == inf
    assert E.class_order(euler_power(E, 2)) == 2
    O = octahedron()
    assert E.class_order(euler_power(E, 1)) == 2
    assert O.class_order(euler_power(O, 2)) == 2
    assert O.class_order(euler_power(O, 3)) == 1
    assert co_index(O) == 2 and yang_index(O) == 2
    assert co_index(E) == 2
    assert co_index(deleted_product(cone(K5))) == 3


def test_group_cohomology_examples():
    assert z2_group_cohomology(GroupAction((0, 0), ((0, 1), (1, 0))))[1].is_trivial()
    assert z2_group_cohomology(GroupAction((0,), ((-1,),)))[1] == Z2
    E0 = theta0(parse_diagram("1 2 1 2"))
    act = involution_on_homology(E0, 2)
    assert z2_group_cohomology(act)[1].is_trivial()


def test_involution_on_homology_of_circle_deleted_product():
    act = involution_on_homology(deleted_product(skeleton(2, 1)), 1)
    assert act.group() == Z and act.compose_square_is_identity()


# --------------------------------------------------------------- properties


@given(small_complexes())
def test_complex_invariants(K):
    E = deleted_product(K)
    if E.size():
        assert E.check()


@given(small_complexes())
def test_euler_powers_have_order_at_most_two(K):
    E = deleted_product(K)
    if not E.count(0):
        return
    for k in range(1, E.dimension + 2):
        c = euler_power(E, k)
        assert E.is_cycle(c)
        assert E.class_order(c) in (1, 2)
        assert E.class_order(2 * c) == 1
        if E.class_order(euler_power(E, k, mod2=True)) == 2:
            assert E.class_order(c) == 2
    assert co_index(E) <= E.dimension


def _transport(E, F, c):
    """Re-express the class c (on E's representatives) on F's representatives."""
    full = E.extend(c.degree, list(c.values), c.parity)
    return type(c)(F, c.degree, c.parity, tuple(F.restrict(c.degree, full)), c.direction, c.mod2)


@pytest.mark.parametrize("K", [K5, skeleton(5, 1), cone(skeleton(3, 1))], ids=["k5", "k6", "cone-k4"])
def test_representative_choice_does_not_matter(K):
    E = deleted_product(K)
    F = E.with_reps(lambda d, i, j: j)
    for k in range(1, E.dimension + 1):
        a = euler_power(E, k)
        b = _transport(F, E, euler_power(F, k))
        assert E.class_order(a - b) == 1


def _transfer_matrix(E, d, parity):
    eps = 1 if parity == UNTWISTED else -1
    rows = []
    for r in E.reps(d):
        j, s = E.involution(d, r)
        row = {r: 1}
        row[j] = row.get(j, 0) + eps * s
        rows.append(row)
    return rows


@pytest.mark.parametrize("K", [K5, skeleton(2, 1), skeleton(5, 1)], ids=["k5", "circle", "k6"])
@pytest.mark.parametrize("parity", [UNTWISTED, TWISTED])
def test_smith_sequence_exactness(K, parity):
    E = deleted_product(K)
    cc = E.chain_complex()
    for d in range(E.dimension):
        # cocycles upstairs, pushed down by the transfer, die under the connecting map
        cob = cc.outgoing(d + 1).T if d + 1 in E.degrees() else IntMatrix(0, E.count(d))
        rows = _transfer_matrix(E, d, parity)
        up = integer_kernel(cob)
        images = []
        for x in up:
            f = [sum(a * x[i] for i, a in row.items()) for row in rows]
            c = E.cochain(d, parity, f)
            assert E.is_cycle(c)
            assert E.class_order(smith_connecting_cohomology(E, c)) == 1
            images.append(f)
        # and every cocycle killed by the connecting map comes from upstairs
        qcob = E.quotient_boundary(d + 1, parity).T
        qb = E.quotient_boundary(d, parity).T.columns() if d else []
        n = len(E.reps(d))
        A = IntMatrix(n, len(images) + len(qb), [{i: v for i, v in enumerate(f) if v} for f in images] + list(qb))
        for vec in integer_kernel(qcob):
            c = E.cochain(d, parity, vec)
            if E.class_order(smith_connecting_cohomology(E, c)) == 1:
                assert solve_integer(A, vec) is not None


def test_opposite_parity():
    assert opposite(TWISTED) == UNTWISTED and opposite(UNTWISTED) == TWISTED
