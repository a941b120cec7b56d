"""Linkless embeddings of graphs in R^3.

A graph X is thickened to X+ by coning off every cycle that is disjoint
from some other cycle.  The obstruction is the cube of the Euler class of
the relative deleted product of X inside X+.
"""

import networkx as nx

from ..equivariant import euler_power, relative_deleted_product
from ..simplicial import SimplicialComplex
from .vankampen import ObstructionReport, Verdict

DEFAULT_CYCLE_CAP = 20000


class CycleCapExceeded(RuntimeError):
    pass


def to_networkx(G):
    """The 1-skeleton of G as an undirected networkx graph."""
    if G.dimension > 1:
        raise ValueError("expected a graph (dimension at most 1)")
    H = nx.Graph()
    H.add_nodes_from(v for (v,) in G.simplices(0))
    H.add_edges_from(G.simplices(1))
    return H


def _has_cycle(H):
    return H.number_of_edges() > H.number_of_nodes() - nx.number_connected_components(H)


def linked_cycles(G, cap=DEFAULT_CYCLE_CAP):
    """Simple cycles of G whose vertex-disjoint complement contains a cycle.

    Cycles are returned as tuples of vertices, rotated to start at the
    smallest label and oriented towards the smaller neighbour.
    """
    H = to_networkx(G)
    out = []
    for n, cyc in enumerate(nx.simple_cycles(H)):
        if n >= cap:
            raise CycleCapExceeded(f"more than {cap} cycles")
        rest = H.subgraph(set(H) - set(cyc))
        if _has_cycle(rest):
            out.append(_normalize_cycle(cyc))
    return sorted(set(out))


def _normalize_cycle(cyc):
    i = cyc.index(min(cyc))
    c = cyc[i:] + cyc[:i]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


def x_plus(G, cap=DEFAULT_CYCLE_CAP):
    """G with a cone over every cycle that has a disjoint cycle.

    Apexes get fresh labels: integers above the largest vertex for integer
    graphs, otherwise ``("apex", i)``.

    >>> from ..simplicial import SimplicialComplex
    >>> two = SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    >>> x_plus(two).f_vector()
    [8, 12, 6]
    """
    cycles = linked_cycles(G, cap)
    verts = [v for (v,) in G.simplices(0)]
    ints = all(isinstance(v, int) for v in verts)
    top = max(verts) if ints and verts else 0
    facets = list(G.facets())
    for i, cyc in enumerate(cycles):
        apex = top + 1 + i if ints else ("apex", i)
        for j in range(len(cyc)):
            facets.append((apex, cyc[j], cyc[(j + 1) % len(cyc)]))
    return SimplicialComplex.from_facets(facets)


def linkless_obstruction(G, cap=DEFAULT_CYCLE_CAP):
    """Cube of the Euler class of the deleted product of G relative to X+."""
    Y = x_plus(G, cap)
    E = relative_deleted_product(G, Y)
    extra = {"coned_cycles": len(Y.simplices(0)) - len(G.simplices(0))}
    if E.count(0) == 0:
        return ObstructionReport(3, None, True, 1, True, Verdict.LINKLESS, extra)
    c = euler_power(E, 3)
    order = E.class_order(c)
    mod2_trivial = E.class_order(c.reduce_mod2()) == 1
    trivial = order == 1
    verdict = Verdict.LINKLESS if trivial else Verdict.NOT_LINKLESS
    return ObstructionReport(3, c, trivial, order, mod2_trivial, verdict, extra)
