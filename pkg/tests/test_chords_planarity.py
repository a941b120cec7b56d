from itertools import combinations

import pytest

from embeddability.chords.config import build_config_space
from embeddability.chords.derivative import propto
from embeddability.chords.diagram import all_diagrams, irreducible_factors, parse_diagram
from embeddability.chords.h1 import h1_structure
from embeddability.chords.planarity import (
    _straight_vertices,
    closed_trails,
    manturov_pairs,
    passages,
    planarity,
    realizable,
    v_ab_derivative,
    zeta_trivial,
)
from embeddability.exactalg import AbelianGroup


def test_examples():
    assert manturov_pairs(parse_diagram("1 1 2 2")) == []
    assert len(manturov_pairs(parse_diagram("1 2 1 2"))) == 2
    assert planarity(parse_diagram("1 1")).planar
    assert not planarity(parse_diagram("1 2 1 2")).planar


def test_trails_are_closed_and_edge_simple():
    d = parse_diagram("1 2 3 1 2 3")
    for w in closed_trails(d):
        arcs = [s[0] for s in w]
        assert len(set(arcs)) == len(arcs)
        assert w[0][1] == 1 and w[0][0] == min(arcs)
        ps = passages(d, w)
        assert all(d.vertex_of(hi) == v == d.vertex_of(ho) for v, hi, ho in ps)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_three_way_agreement(m):
    for d in all_diagrams(m):
        r = planarity(d)
        assert r.planar == zeta_trivial(d) == (not manturov_pairs(d)) == realizable(d)
        assert bool(manturov_pairs(d, simple=True)) == bool(r.manturov)


def test_vab_parity_rule():
    # the parity of v_ab counts transversal meetings of a and b
    for m in (2, 3):
        for d in all_diagrams(m):
            B = build_config_space(d)
            for a, b in combinations(closed_trails(d), 2):
                if {s[0] for s in a} & {s[0] for s in b}:
                    continue
                common = {p[0] for p in passages(d, a)} & {p[0] for p in passages(d, b)}
                transversal = len(common & _straight_vertices(d, a))
                assert propto(v_ab_derivative(d, a, b), B) == transversal % 2


def test_h1_examples():
    r = h1_structure(parse_diagram("1 1"))
    assert r.kernel_mod_odd == AbelianGroup(1, ())
    r = h1_structure(parse_diagram("1 2 1 2"))
    assert r.kernel_mod_odd == AbelianGroup(0, (2,))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_h1_irreducible(m):
    for d in all_diagrams(m):
        if len(irreducible_factors(d)) != 1:
            continue
        r = h1_structure(d)
        expected = AbelianGroup(1, ()) if realizable(d) else AbelianGroup(0, (2,))
        assert r.kernel_mod_odd == expected
        if m <= 3:
            assert r.relative_cap_vanishes
