"""Straight-line spatial graphs and the one-parameter obstruction to isotopy.

A spatial graph is projected to the plane along a generic direction.  Each
pair of disjoint edges receives the signed number of crossings between
their projections.  This is a twisted 2-cochain on the quotient of the
deleted product; two embeddings with non-cohomologous cochains are not
isotopic.

Crossing signs use the right-hand rule seen from above: with the
projection along (a, b, 1), larger z is over, and a crossing is positive
when the under strand points to the left of the over strand.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..equivariant import TWISTED, TwistedClass, deleted_product
from ..geometry import Degenerate, det
from ..simplicial import SimplicialComplex
from .vankampen import ObstructionReport, Verdict

MAX_DIRECTION_TRIES = 64


def _cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _sign(x):
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class SpatialGraphEmbedding:
    """A graph with a rational point in R^3 for every vertex; edges are straight."""

    graph: SimplicialComplex
    coords: dict = field(hash=False)

    def __post_init__(self):
        if self.graph.dimension > 1:
            raise ValueError("spatial embeddings are for graphs")
        fixed = {}
        for (v,) in self.graph.simplices(0):
            if v not in self.coords:
                raise ValueError(f"vertex {v!r} has no coordinates")
            p = tuple(Fraction(x) for x in self.coords[v])
            if len(p) != 3:
                raise ValueError(f"vertex {v!r} needs 3 coordinates")
            fixed[v] = p
        object.__setattr__(self, "coords", fixed)
        self.check()

    @property
    def edges(self):
        return self.graph.simplices(1)

    def check(self):
        """Raise Degenerate unless the straight-line map is an embedding."""
        pts = list(self.coords.values())
        if len(set(pts)) != len(pts):
            raise Degenerate("two vertices share a point")
        edges = self.edges
        for (v,) in self.graph.simplices(0):
            p = self.coords[v]
            for e in edges:
                if v not in e and _point_on_segment3(p, self.coords[e[0]], self.coords[e[1]]):
                    raise Degenerate(f"vertex {v!r} lies on edge {e!r}")
        for i, e in enumerate(edges):
            for f in edges[i + 1:]:
                shared = set(e) & set(f)
                P = (self.coords[e[0]], self.coords[e[1]])
                Q = (self.coords[f[0]], self.coords[f[1]])
                if not shared and _segments_meet3(P, Q):
                    raise Degenerate(f"edges {e!r} and {f!r} intersect")
                if shared and _collinear_overlap3(P, Q, shared.pop(), e, f, self.coords):
                    raise Degenerate(f"edges {e!r} and {f!r} overlap")

    @classmethod
    def parse(cls, text):
        """Read vertex lines ``label x y z`` and edge lines ``label label``."""
        rows = []
        for n, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            if len(line) not in (2, 4):
                raise ValueError(f"line {n}: expected 2 or 4 tokens")
            rows.append((n, line))
        labels = [r[1][0] for r in rows] + [r[1][1] for r in rows if len(r[1]) == 2]
        conv = int if all(_is_int(x) for x in labels) else str
        coords, edges = {}, []
        for n, line in rows:
            if len(line) == 4:
                try:
                    coords[conv(line[0])] = tuple(Fraction(x) for x in line[1:])
                except ValueError as exc:
                    raise ValueError(f"line {n}: bad coordinate") from exc
            else:
                a, b = conv(line[0]), conv(line[1])
                if a == b:
                    raise ValueError(f"line {n}: loop edge")
                edges.append(tuple(sorted((a, b))))
        missing = {v for e in edges for v in e} - set(coords)
        if missing:
            raise ValueError(f"edges use vertices without coordinates: {sorted(missing)}")
        G = SimplicialComplex.from_facets(edges + [(v,) for v in coords])
        return cls(G, coords)

    def to_text(self):
        lines = []
        for (v,) in self.graph.simplices(0):
            lines.append(" ".join([str(v)] + [str(x) for x in self.coords[v]]))
        lines += [f"{a} {b}" for a, b in self.edges]
        return "\n".join(lines) + "\n"


def _is_int(s):
    try:
        int(s)
        return True
    except ValueError:
        return False


def _point_on_segment3(p, a, b):
    d, w = _sub(b, a), _sub(p, a)
    cr = (d[1] * w[2] - d[2] * w[1], d[2] * w[0] - d[0] * w[2], d[0] * w[1] - d[1] * w[0])
    if any(cr):
        return False
    t = sum(x * y for x, y in zip(w, d)) / sum(x * x for x in d)
    return 0 <= t <= 1


def _segments_meet3(P, Q):
    """Closed straight segments in R^3 share a point."""
    p0, p1 = P
    q0, q1 = Q
    if det([_sub(p1, p0), _sub(q0, p0), _sub(q1, p0)]) != 0:
        return False
    if any(_point_on_segment3(x, *Q) for x in P) or any(_point_on_segment3(x, *P) for x in Q):
        return True
    d1, d2 = _sub(p1, p0), _sub(q1, q0)
    normal = (d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2], d1[0] * d2[1] - d1[1] * d2[0])
    if not any(normal):
        return False
    drop = max(range(3), key=lambda i: abs(normal[i]))
    keep = [i for i in range(3) if i != drop]
    proj = lambda p: (p[keep[0]], p[keep[1]])
    return _proper_crossing2(proj(p0), proj(p1), proj(q0), proj(q1)) is not None


def _collinear_overlap3(P, Q, v, e, f, coords):
    a = coords[v]
    u = coords[e[0] if e[1] == v else e[1]]
    w = coords[f[0] if f[1] == v else f[1]]
    du, dw = _sub(u, a), _sub(w, a)
    cr = (du[1] * dw[2] - du[2] * dw[1], du[2] * dw[0] - du[0] * dw[2], du[0] * dw[1] - du[1] * dw[0])
    return not any(cr) and sum(x * y for x, y in zip(du, dw)) > 0


def _proper_crossing2(p0, p1, q0, q1):
    """Parameters (s, t) of an interior crossing of two planar segments, or None.

    Raises Degenerate if the segments overlap or touch at an endpoint.
    """
    dp, dq = _sub(p1, p0), _sub(q1, q0)
    den = _cross2(dp, dq)
    w = _sub(q0, p0)
    if den == 0:
        if _cross2(dp, w) != 0:
            return None
        L = sum(x * x for x in dp)
        s0 = sum(x * y for x, y in zip(w, dp)) / L
        s1 = sum(x * y for x, y in zip(_sub(q1, p0), dp)) / L
        if max(s0, s1) < 0 or min(s0, s1) > 1:
            return None
        raise Degenerate("collinear overlapping projections")
    s = Fraction(_cross2(w, dq)) / den
    t = Fraction(_cross2(w, dp)) / den
    if s < 0 or s > 1 or t < 0 or t > 1:
        return None
    if s in (0, 1) or t in (0, 1):
        raise Degenerate("a projected vertex lies on a projected edge")
    return s, t


def crossings(g, direction):
    """All crossings of the projection along (a, b, 1).

    Returns a list of (over_edge, under_edge, sign, point).  Raises
    Degenerate on coincident vertices, tangencies or triple points.
    """
    a, b = (Fraction(x) for x in direction)
    flat = {v: (p[0] - a * p[2], p[1] - b * p[2]) for v, p in g.coords.items()}
    if len(set(flat.values())) != len(flat):
        raise Degenerate("two vertices project to the same point")
    edges = g.edges
    out = []
    seen = {}
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            shared = set(e) & set(f)
            if shared:
                v = shared.pop()
                u = e[0] if e[1] == v else e[1]
                w = f[0] if f[1] == v else f[1]
                du, dw = _sub(flat[u], flat[v]), _sub(flat[w], flat[v])
                if _cross2(du, dw) == 0 and sum(x * y for x, y in zip(du, dw)) > 0:
                    raise Degenerate("adjacent edges overlap in projection")
                continue
            st = _proper_crossing2(flat[e[0]], flat[e[1]], flat[f[0]], flat[f[1]])
            if st is None:
                continue
            s, t = st
            pe, pf = g.coords[e[0]], g.coords[f[0]]
            ze = pe[2] + s * (g.coords[e[1]][2] - pe[2])
            zf = pf[2] + t * (g.coords[f[1]][2] - pf[2])
            if ze == zf:
                raise Degenerate("edges meet in space")
            point = tuple(x + s * y for x, y in zip(flat[e[0]], _sub(flat[e[1]], flat[e[0]])))
            if point in seen:
                raise Degenerate("triple point in projection")
            seen[point] = (e, f)
            over, under = (e, f) if ze > zf else (f, e)
            do = _sub(flat[over[1]], flat[over[0]])
            du = _sub(flat[under[1]], flat[under[0]])
            out.append((over, under, _sign(_cross2(do, du)), point))
    return out


def _random_direction(rng):
    return (Fraction(rng.randint(-999, 999), 1009), Fraction(rng.randint(-999, 999), 1013))


def generic_direction(g, seed=0, direction=None):
    """A projection direction with generic crossings, drawn from a seeded RNG."""
    if direction is not None:
        crossings(g, direction)
        return tuple(Fraction(x) for x in direction)
    rng = random.Random(seed)
    for _ in range(MAX_DIRECTION_TRIES):
        d = _random_direction(rng)
        try:
            crossings(g, d)
        except Degenerate:
            continue
        return d
    raise Degenerate("no generic projection direction found")


def gauss_projection_class(g, seed=0, direction=None, E=None):
    """Twisted degree-2 class given by signed crossings of disjoint edges."""
    d = generic_direction(g, seed, direction)
    E = deleted_product(g.graph) if E is None else E
    values = {}
    for over, under, sgn, _ in crossings(g, d):
        values[(over, under)] = values.get((over, under), 0) + sgn
    if 2 not in E.degrees():
        return TwistedClass(E, 2, TWISTED, (), "cohomology")
    return E.cochain(2, TWISTED, values)


def isotopy_obstruction(f, g, seed=0):
    """Difference of the projection classes of two embeddings of one graph."""
    if f.graph != g.graph:
        raise ValueError("embeddings of different graphs")
    E = deleted_product(f.graph)
    cf = gauss_projection_class(f, seed, E=E)
    cg = gauss_projection_class(g, seed, E=E)
    diff = cg - cf
    order = E.class_order(diff)
    trivial = order == 1
    verdict = Verdict.OBSTRUCTION_VANISHES if trivial else Verdict.NOT_ISOTOPIC
    mod2 = E.class_order(diff.reduce_mod2()) == 1
    return ObstructionReport(3, diff, trivial, order, mod2, verdict)
