"""Planarity of chord diagrams, decided three independent ways.

* Homologically: the square of the Euler class of the blown-up space.
* Combinatorially: a search for a Manturov pair, two edge-disjoint
  closed walks in the quotient graph with exactly one common vertex where
  both go straight through.
* By brute force: a plane curve with the given Gauss word is the same as
  a genus-zero rotation system of the quotient graph in which the two
  strands at every vertex are opposite.  All 2^m such systems are traced.
"""

from dataclasses import dataclass
from itertools import combinations, product

from ..equivariant import euler_power
from .config import build_config_space
from .derivative import DerivativeData


class PlanarityDisagreement(AssertionError):
    pass


def _step_in(step):
    arc, sgn = step
    return ("in", arc) if sgn > 0 else ("out", arc)


def _step_out(step):
    arc, sgn = step
    return ("out", arc) if sgn > 0 else ("in", arc)


def _start(d, step):
    arc, sgn = step
    return d.tail(arc) if sgn > 0 else d.head(arc)


def _end(d, step):
    arc, sgn = step
    return d.head(arc) if sgn > 0 else d.tail(arc)


def passages(d, walk):
    """(vertex, incoming half-edge, outgoing half-edge) for each turn of a closed walk."""
    out = []
    for k, step in enumerate(walk):
        nxt = walk[(k + 1) % len(walk)]
        out.append((_end(d, step), _step_in(step), _step_out(nxt)))
    return out


def closed_trails(d, simple=False):
    """Closed walks without repeated arcs, one per cyclic class up to reversal.

    A walk is a tuple of (arc, +1 or -1) steps, rotated to start with its
    smallest arc traversed forwards.  With ``simple`` only walks that
    visit each vertex once are returned.

    >>> from .diagram import parse_diagram
    >>> closed_trails(parse_diagram("1 1"))
    [((0, 1),), ((0, 1), (1, -1)), ((0, 1), (1, 1)), ((1, 1),)]
    """
    N = d.n_arcs
    found = []

    def extend(walk, used, v0, v):
        if v == v0:
            found.append(tuple(walk))
        for e in range(walk[0][0] + 1, N):
            if e in used:
                continue
            for sgn in (1, -1):
                step = (e, sgn)
                if _start(d, step) != v:
                    continue
                walk.append(step)
                used.add(e)
                extend(walk, used, v0, _end(d, step))
                used.discard(e)
                walk.pop()

    for s in range(N):
        first = (s, 1)
        extend([first], {s}, _start(d, first), _end(d, first))
    out = set()
    for w in found:
        if simple and len({p[0] for p in passages(d, w)}) != len(w):
            continue
        out.add(w)
    return sorted(out)


def _straight_vertices(d, walk):
    return {v for v, hi, ho in passages(d, walk) if d.is_straight(v, hi, ho)}


def is_manturov_pair(d, a, b):
    if {s[0] for s in a} & {s[0] for s in b}:
        return False
    va = {p[0] for p in passages(d, a)}
    vb = {p[0] for p in passages(d, b)}
    common = va & vb
    transversal = common & _straight_vertices(d, a)
    return len(transversal) == 1


def manturov_pairs(d, simple=False):
    """All Manturov pairs of closed trails (or of simple cycles with ``simple``).

    >>> from .diagram import parse_diagram
    >>> manturov_pairs(parse_diagram("1 1 2 2"))
    []
    >>> len(manturov_pairs(parse_diagram("1 2 1 2")))
    2
    """
    trails = closed_trails(d, simple)
    return [(a, b) for a, b in combinations(trails, 2) if is_manturov_pair(d, a, b)]


def v_ab_derivative(d, a, b):
    """Derivative of the linking number of push-offs of the walks a and b.

    A crossing between arcs C and D changes the linking number by
    eps_a(C) eps_b(D) + eps_b(C) eps_a(D), where eps records the direction
    in which a walk traverses an arc.
    """
    if set(a) == set(b):
        raise ValueError("the two walks coincide")
    arcs_a = {s[0]: s[1] for s in a}
    arcs_b = {s[0]: s[1] for s in b}
    if set(arcs_a) & set(arcs_b):
        raise ValueError("the walks share an arc")
    vals = {}
    for c in range(d.n_arcs):
        for e in range(c + 1, d.n_arcs):
            v = arcs_a.get(c, 0) * arcs_b.get(e, 0) + arcs_b.get(c, 0) * arcs_a.get(e, 0)
            if v:
                vals[(c, e)] = v
    return DerivativeData(d, vals)


def _opposite(h):
    kind, arc = h
    return ("out" if kind == "in" else "in", arc)


def realizable(d):
    """Brute-force Gauss realizability: search rotation systems with opposite strands.

    >>> from .diagram import parse_diagram
    >>> realizable(parse_diagram("1 2 1 2")), realizable(parse_diagram("1 2 2 1"))
    (False, True)
    """
    if d.m == 0:
        return True
    faces_needed = d.m + 2  # V - E + F = 2 with V = m, E = 2m
    for choice in product((0, 1), repeat=d.m):
        nxt = {}
        for w, c in enumerate(choice):
            (a1, a2), (b1, b2) = d.strands(w)
            cyc = (a1, b1, a2, b2) if c == 0 else (a1, b2, a2, b1)
            for k in range(4):
                nxt[cyc[k]] = cyc[(k + 1) % 4]
        seen = set()
        faces = 0
        for h in nxt:
            if h in seen:
                continue
            faces += 1
            x = h
            while x not in seen:
                seen.add(x)
                x = nxt[_opposite(x)]
        if faces == faces_needed:
            return True
    return False


@dataclass
class PlanarityReport:
    planar: bool
    zeta_trivial: bool
    manturov: list
    realizable: bool

    def to_json(self):
        return {
            "planar": self.planar,
            "zeta_trivial": self.zeta_trivial,
            "manturov_pairs": len(self.manturov),
            "realizable": self.realizable,
        }


def zeta_trivial(d, B=None):
    """Whether the square of the Euler class of the blown-up space vanishes."""
    B = build_config_space(d) if B is None else B
    return B.E.class_order(euler_power(B.E, 2)) == 1


def planarity(d, B=None):
    """Planarity with three witnesses that must agree."""
    zt = zeta_trivial(d, B)
    pairs = manturov_pairs(d)
    real = realizable(d)
    if not (zt == (not pairs) == real):
        raise PlanarityDisagreement(
            f"{d}: zeta trivial {zt}, Manturov pairs {len(pairs)}, realizable {real}")
    return PlanarityReport(zt, zt, pairs, real)
