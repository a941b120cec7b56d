"""Named inputs used by the command line and the tests."""

import re

import networkx as nx

from .obstructions.spatial import SpatialGraphEmbedding
from .obstructions.vankampen import sarkaria_example
from .simplicial import SimplicialComplex, skeleton

SPATIAL = {
    # two triangles; the second pierces the first once
    "hopf-triangles": (
        "1 -1 -1 0\n2 3 -1 0\n3 -1 3 0\n4 0 0 -2\n5 0 0 2\n6 -3 -3 0\n"
        "1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n"),
    # the same triangles, the second moved aside
    "unlinked-triangles": (
        "1 -1 -1 0\n2 3 -1 0\n3 -1 3 0\n4 10 0 -2\n5 10 0 2\n6 7 -3 0\n"
        "1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n"),
}


def complete_graph(n):
    return skeleton(n - 1, 1)


def complete_bipartite(p, q):
    return SimplicialComplex.from_facets([(i, p + j) for i in range(1, p + 1) for j in range(1, q + 1)])


def petersen():
    G = nx.petersen_graph()
    return SimplicialComplex.from_facets([tuple(sorted((u + 1, v + 1))) for u, v in G.edges()])


def flores(n):
    """n-skeleton of the (2n+2)-simplex."""
    return skeleton(2 * n + 2, n)


def fixture_names():
    return ["k4", "k5", "k6", "k33", "petersen", "sarkaria", "flores-<n>"] + sorted(SPATIAL)


def fixture(name):
    """The fixture as a SimplicialComplex or SpatialGraphEmbedding.

    >>> fixture("k5").f_vector()
    [5, 10]
    >>> fixture("flores-1").f_vector()
    [5, 10]
    """
    m = re.fullmatch(r"k(\d)", name)
    if m:
        return complete_graph(int(m.group(1)))
    if name == "k33":
        return complete_bipartite(3, 3)
    if name == "petersen":
        return petersen()
    if name == "sarkaria":
        return sarkaria_example()
    m = re.fullmatch(r"flores-(\d+)", name)
    if m:
        return flores(int(m.group(1)))
    if name in SPATIAL:
        return SpatialGraphEmbedding.parse(SPATIAL[name])
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")


def fixture_text(name):
    obj = fixture(name)
    return obj.to_text()
