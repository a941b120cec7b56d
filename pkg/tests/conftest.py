import random

import networkx as nx
import pytest
from hypothesis import settings

from embeddability.simplicial import SimplicialComplex

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

# 6-vertex real projective plane
RP2_FACETS = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
              (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6)]
# 7-vertex torus
TORUS_FACETS = [tuple(sorted(((i + a) % 7, (i + b) % 7, (i + c) % 7)))
                for i in range(7) for a, b, c in ((0, 1, 3), (0, 2, 3))]


@pytest.fixture
def rp2():
    return SimplicialComplex.from_facets(RP2_FACETS)


@pytest.fixture
def torus():
    return SimplicialComplex.from_facets(TORUS_FACETS)


def graph_complex(edges, vertices=()):
    return SimplicialComplex.from_facets([tuple(sorted(e)) for e in edges] + [(v,) for v in vertices])


def random_complex(rng, n_vertices, dim, n_facets):
    verts = list(range(1, n_vertices + 1))
    facets = {tuple(sorted(rng.sample(verts, dim + 1))) for _ in range(n_facets)}
    return SimplicialComplex.from_facets(sorted(facets))


def random_planar_graphs(count, seed, max_vertices=7):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, max_vertices)
        G = nx.gnp_random_graph(n, rng.uniform(0.3, 0.8), seed=rng.randrange(10**9))
        if G.number_of_edges() < 2 or not nx.check_planarity(G)[0]:
            continue
        out.append(graph_complex([(u + 1, v + 1) for u, v in G.edges()], [v + 1 for v in G.nodes()]))
    return out


def random_trees(count, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, 8)
        edges = [(rng.randrange(1, v), v) for v in range(2, n + 1)]
        out.append(graph_complex(edges))
    return out


# one summary line per acceptance criterion, collected by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
