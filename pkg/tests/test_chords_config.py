from math import comb

import pytest

from embeddability.chords.config import build_config_space, gamma1_rank, theta0
from embeddability.chords.diagram import all_diagrams, interlacement, irreducible_factors, parse_diagram
from embeddability.equivariant import TWISTED


def test_parse():
    d = parse_diagram("1 2 1 2")
    assert d.m == 2 and d.n_arcs == 4
    assert parse_diagram("1 1 2 2").chords == ((0, 1), (2, 3))
    with pytest.raises(ValueError):
        parse_diagram("1 2 1")
    assert parse_diagram(d.to_text()) == d
    assert parse_diagram("a b a b") == d


def test_interlacement_and_factors():
    assert list(interlacement(parse_diagram("1 2 1 2")).edges()) == [(0, 1)]
    assert irreducible_factors(parse_diagram("1 2 1 2")) == [[0, 1]]
    assert interlacement(parse_diagram("1 1 2 2")).number_of_edges() == 0
    assert len(irreducible_factors(parse_diagram("1 1 2 2"))) == 2
    tri = interlacement(parse_diagram("1 2 3 1 2 3"))
    assert tri.number_of_edges() == 3 and len(irreducible_factors(parse_diagram("1 2 3 1 2 3"))) == 1


def test_diagram_counts():
    assert [len(all_diagrams(m, up_to_rotation=False)) for m in range(1, 5)] == [1, 3, 15, 105]
    assert [len(all_diagrams(m)) for m in range(1, 5)] == [1, 2, 5, 18]


def test_quotient_graph_is_four_valent():
    for d in all_diagrams(4):
        for w in range(d.m):
            hs = d.half_edges(w)
            assert len(set(hs)) == 4
            assert all(d.vertex_of(h) == w for h in hs)


def test_one_chord():
    B = build_config_space(parse_diagram("1 1"))
    assert B.nu_components() == [0]
    assert B.E.check()


@pytest.mark.parametrize("word,rank", [("1 2 1 2", 2), ("1 1 2 2", 3), ("1 2 3 1 2 3", 4)])
def test_gamma1_rank_examples(word, rank):
    assert gamma1_rank(parse_diagram(word)) == rank


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_rank_formula_exhaustive(m):
    for d in all_diagrams(m):
        B = build_config_space(d)
        r = B.E.twisted_cohomology(2, TWISTED).free_rank
        assert r == comb(m, 2) + len(irreducible_factors(d))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_excision(m):
    # H_2 of the blown-up space relative to the annuli equals H_2 of the unmodified grid part
    for d in all_diagrams(m):
        B = build_config_space(d)
        R = B.E.relative({k: set(v) for k, v in B.nu.items()})
        assert R.homology(2) == theta0(d).homology(2)


def test_involution_is_free_and_annuli_swap():
    B = build_config_space(parse_diagram("1 2 3 1 2 3"))
    E = B.E
    for d in E.degrees():
        for i in range(E.count(d)):
            j, s = E.involution(d, i)
            assert j != i and E.involution(d, j) == (i, s)
    for w in range(3):
        cells = B.nu_complex(w)
        images = {E.label(0, E.involution(0, E.index(0, c))[0]) for c in cells[0]}
        assert images == set(cells[0])


def test_empty_diagram_rejected():
    with pytest.raises(ValueError):
        build_config_space(parse_diagram(""))
