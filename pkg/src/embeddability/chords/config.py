"""Configuration spaces of a chord diagram.

``theta0`` is the product cell structure on G x G with the open squares
C x C removed, taken relative to its fixed points (w, w) so that the swap
is free.  ``build_config_space`` performs the blow-up: at every chord
vertex w the corner of each square C x D at (w, w) is cut off, and the
resulting link of (w, w) is capped by the four vertical faces of a cube.

The link is the 1-skeleton of the cube with vertices in {-1, 1}^3.  The
points P1(h) lie on C x w next to (w, w) and the points P2(h) on w x C,
where h is the half-edge of C at w.  For the strands (a1, a2) and
(b1, b2) of w,

    P1(a1) = (1, 1, 1)     P1(a2) = (-1, -1, 1)
    P1(b1) = (1, -1, -1)   P1(b2) = (-1, 1, -1)     P2(h) = -P1(h).

Every cube edge joins some P1(h1) to P2(h2) with h1 != h2 and is oriented
from P1 to P2.  Each vertical face is split into two triangles, and
antipodal faces get antipodal diagonals, so the antipodal map stays
cellular.  Together these form the annulus nu at w; its image in the
quotient is a Moebius band.
"""

from dataclasses import dataclass, field
from math import comb

from ..equivariant import TWISTED, UNTWISTED, EquivariantCellComplex
from .diagram import irreducible_factors

_P1 = {0: (1, 1, 1), 1: (-1, -1, 1), 2: (1, -1, -1), 3: (-1, 1, -1)}
_FACES = (
    ((1, 1, 1), (1, -1, 1), (1, -1, -1), (1, 1, -1)),
    ((1, 1, 1), (-1, 1, 1), (-1, 1, -1), (1, 1, -1)),
)


def _neg(p):
    return tuple(-x for x in p)


def _cube_points(d, w):
    """Map cube coordinates to link point labels at chord vertex w."""
    hs = d.half_edges(w)
    out = {}
    for k, h in enumerate(hs):
        out[_P1[k]] = ("P1", w, h)
        out[_neg(_P1[k])] = ("P2", w, h)
    return out


class _Builder:
    def __init__(self):
        self.cells = {0: [], 1: [], 2: []}
        self.bnd = {1: [], 2: []}
        self.index = {0: {}, 1: {}, 2: {}}
        self.image = {0: {}, 1: {}, 2: {}}

    def add(self, d, label, boundary, image, sign):
        self.index[d][label] = len(self.cells[d])
        self.cells[d].append(label)
        if d:
            self.bnd[d].append(boundary)
        self.image[d][label] = (image, sign)

    def build(self, check=True):
        bnd = {}
        for d in (1, 2):
            bnd[d] = []
            for b in self.bnd[d]:
                col = {}
                for lab, a in b.items():
                    i = self.index[d - 1][lab]
                    col[i] = col.get(i, 0) + a
                bnd[d].append({k: v for k, v in col.items() if v})
        inv = {d: [(self.index[d][self.image[d][c][0]], self.image[d][c][1]) for c in self.cells[d]]
               for d in (0, 1, 2)}
        return EquivariantCellComplex(self.cells, bnd, inv, check=check)


def _grid_point(d, x, y, blown, first, h):
    """The endpoint (x, y) of a grid edge; replaced by a link point on the diagonal."""
    if x != y:
        return ("v", x, y)
    if not blown:
        return None
    return ("P1", x, h) if first else ("P2", x, h)


def _edge_boundary(bd, d, blown):
    """Boundary dicts for the grid edges C x y and x x D."""
    out = {}
    for C in range(d.n_arcs):
        t, hd = d.tail(C), d.head(C)
        for y in range(d.m):
            b = {}
            for pt, a in ((_grid_point(d, hd, y, blown, True, ("in", C)), 1),
                          (_grid_point(d, t, y, blown, True, ("out", C)), -1)):
                if pt is not None:
                    b[pt] = b.get(pt, 0) + a
            out[("e1", C, y)] = b
            b = {}
            for pt, a in ((_grid_point(d, y, hd, blown, False, ("in", C)), 1),
                          (_grid_point(d, y, t, blown, False, ("out", C)), -1)):
                if pt is not None:
                    b[pt] = b.get(pt, 0) + a
            out[("e2", y, C)] = b
    return out


def _square_boundary(d, C, D, blown):
    """Boundary of the square C x D, with its corners on the diagonal cut off when blown."""
    ends_C = ((0, d.tail(C), ("out", C)), (1, d.head(C), ("in", C)))
    ends_D = ((0, d.tail(D), ("out", D)), (1, d.head(D), ("in", D)))
    b = {}
    for lab, a in ((("e2", d.head(C), D), 1), (("e2", d.tail(C), D), -1),
                   (("e1", C, d.head(D)), -1), (("e1", C, d.tail(D)), 1)):
        b[lab] = b.get(lab, 0) + a
    if blown:
        for s0, x, hc in ends_C:
            for t0, y, hd in ends_D:
                if x == y:
                    lab = ("L", x, hc, hd)
                    b[lab] = b.get(lab, 0) + (-1 if s0 == t0 else 1)
    return {k: v for k, v in b.items() if v}


def _grid(d, B, blown):
    m, N = d.m, d.n_arcs
    for x in range(m):
        for y in range(m):
            if x != y:
                B.add(0, ("v", x, y), None, ("v", y, x), 1)
    if blown:
        for w in range(m):
            for h in d.half_edges(w):
                B.add(0, ("P1", w, h), None, ("P2", w, h), 1)
                B.add(0, ("P2", w, h), None, ("P1", w, h), 1)
    eb = _edge_boundary(B, d, blown)
    for C in range(N):
        for y in range(m):
            B.add(1, ("e1", C, y), eb[("e1", C, y)], ("e2", y, C), 1)
            B.add(1, ("e2", y, C), eb[("e2", y, C)], ("e1", C, y), 1)
    return eb


def _annulus(d, B, w):
    pts = _cube_points(d, w)
    hs = d.half_edges(w)
    for h1 in hs:
        for h2 in hs:
            if h1 != h2:
                B.add(1, ("L", w, h1, h2), {("P2", w, h2): 1, ("P1", w, h1): -1}, ("L", w, h2, h1), -1)
    diags = {}
    tris = []
    for f, face in enumerate(_FACES):
        for anti in (0, 1):
            vs = [(_neg(p) if anti else p) for p in face]
            k = 2 * f + anti
            diags[k] = (vs[0], vs[2])
            tris.append((k, (vs[0], vs[1], vs[2])))
            tris.append((k, (vs[0], vs[2], vs[3])))
    for k, (a, b) in diags.items():
        B.add(1, ("G", w, k), {pts[b]: 1, pts[a]: -1}, ("G", w, k ^ 1), 1)
    diag_by_ends = {(a, b): k for k, (a, b) in diags.items()}

    def edge(u, v):
        if (u, v) in diag_by_ends:
            return ("G", w, diag_by_ends[(u, v)]), 1
        if (v, u) in diag_by_ends:
            return ("G", w, diag_by_ends[(v, u)]), -1
        pu, pv = pts[u], pts[v]
        if pu[0] == "P1":
            return ("L", w, pu[2], pv[2]), 1
        return ("L", w, pv[2], pu[2]), -1

    labels = []
    for n, (k, tri) in enumerate(tris):
        b = {}
        for u, v in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
            lab, s = edge(u, v)
            b[lab] = b.get(lab, 0) + s
        labels.append((("T", w, n), b))
    # triangles 0,1 (face 0) pair with 2,3 (its antipode); 4,5 with 6,7
    for n, (lab, b) in enumerate(labels):
        partner = n ^ 2
        B.add(2, lab, b, ("T", w, partner), 1)


@dataclass
class BlownUpComplex:
    """The blown-up configuration space together with its annuli nu."""

    diagram: object
    E: EquivariantCellComplex
    nu: dict
    grid: tuple = field(default=())

    def nu_components(self):
        return list(range(self.diagram.m))

    def square(self, C, D):
        return self.E.index(2, ("sq", C, D))

    def nu_complex(self, w):
        """Cells of the annulus at chord vertex w, by degree."""
        return {d: [c for c in self.nu[d] if c[1] == w] for d in self.nu}


def theta0(d):
    """(G x G minus the open squares C x C) relative to its fixed points (w, w)."""
    if d.m == 0:
        raise ValueError("diagram has no chords")
    B = _Builder()
    _grid(d, B, False)
    for C in range(d.n_arcs):
        for D in range(d.n_arcs):
            if C != D:
                B.add(2, ("sq", C, D), _square_boundary(d, C, D, False), ("sq", D, C), -1)
    return B.build()


def build_config_space(d, check=True):
    """The blown-up space with its annuli; invariants are checked on the way.

    >>> from .diagram import parse_diagram
    >>> B = build_config_space(parse_diagram("1 2 1 2"))
    >>> B.E.twisted_cohomology(2, "twisted").free_rank
    2
    """
    if d.m == 0:
        raise ValueError("diagram has no chords")
    B = _Builder()
    _grid(d, B, True)
    for w in range(d.m):
        _annulus(d, B, w)
    grid = []
    for C in range(d.n_arcs):
        for D in range(d.n_arcs):
            if C != D:
                B.add(2, ("sq", C, D), _square_boundary(d, C, D, True), ("sq", D, C), -1)
                grid.append(("sq", C, D))
    E = B.build(check)
    nu = {0: [c for c in E.cells(0) if c[0] in ("P1", "P2")],
          1: [c for c in E.cells(1) if c[0] in ("L", "G")],
          2: [c for c in E.cells(2) if c[0] == "T"]}
    out = BlownUpComplex(d, E, nu, tuple(grid))
    if check:
        _check_annuli(out)
    return out


def _check_annuli(B):
    from ..simplicial import ChainComplex
    from ..exactalg import IntMatrix
    E = B.E
    for w in range(B.diagram.m):
        cells = B.nu_complex(w)
        counts = [len(cells[d]) for d in (0, 1, 2)]
        if counts[0] - counts[1] + counts[2] != 0:
            raise AssertionError(f"annulus at chord {w} has nonzero Euler characteristic")
        idx = {d: {c: i for i, c in enumerate(cells[d])} for d in cells}
        maps = {}
        for deg in (1, 2):
            cols = []
            for c in cells[deg]:
                b = E.boundary_of(deg, E.index(deg, c))
                cols.append({idx[deg - 1][E.label(deg - 1, f)]: a for f, a in b.items()})
            maps[deg] = IntMatrix(counts[deg - 1], counts[deg], cols)
        cc = ChainComplex(cells, maps)
        h = [cc.homology(i) for i in (0, 1, 2)]
        if [g.free_rank for g in h] != [1, 1, 0] or any(g.torsion for g in h):
            raise AssertionError(f"annulus at chord {w} has homology {list(map(str, h))}")


def gamma1_rank(d, B=None):
    """Rank of the type-1 invariant group: twisted H^2 of the quotient space.

    The closed form C(m, 2) + (number of irreducible factors) is asserted.

    >>> from .diagram import parse_diagram
    >>> [gamma1_rank(parse_diagram(w)) for w in ("1 2 1 2", "1 1 2 2", "1 2 3 1 2 3")]
    [2, 3, 4]
    """
    B = build_config_space(d) if B is None else B
    r = B.E.twisted_cohomology(2, TWISTED).free_rank
    expected = comb(d.m, 2) + len(irreducible_factors(d))
    if r != expected:
        raise AssertionError(f"rank {r} differs from the closed form {expected} for {d}")
    return r
