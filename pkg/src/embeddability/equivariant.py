"""Free Z/2 cell complexes, twisted (co)chains and Euler classes.

A cell complex with a free involution t is stored with one chosen
representative per orbit.  Cochains with f(tc) = f(c) (untwisted) or
f(tc) = -f(c) (twisted) are determined by their values on the
representatives, and likewise chains in the quotients c = tc and c = -tc.
So every twisted complex is an integer complex on the representatives.
The only bookkeeping is the sign picked up when a face is the partner of
a representative rather than the representative itself.

The connecting maps of the two Smith sequences are realized at chain
level.  Both recipes extend a representative by zero off the orbit
representatives, apply the integer (co)boundary, and restrict the result
to the representatives again.  The output lives in the opposite parity.
Iterating the cohomology version on the unit 0-cocycle produces the powers
of the Euler class of the double cover.

>>> from .simplicial import skeleton
>>> E = deleted_product(skeleton(4, 1))
>>> E.size()
110
>>> e2 = euler_power(E, 2)
>>> E.class_order(e2)
2
"""

from dataclasses import dataclass, field
from math import inf

from .exactalg import (
    AbelianGroup,
    IntMatrix,
    class_order,
    cokernel,
    in_span_mod2,
    integer_kernel,
    smith_normal_form,
    solve_integer,
)
from .exactalg import _smith_dense
from .simplicial import ChainComplex, _faces

__all__ = [
    "UNTWISTED",
    "TWISTED",
    "EquivariantCellComplex",
    "TwistedClass",
    "GroupAction",
    "deleted_product",
    "relative_deleted_product",
    "from_simplicial_involution",
    "smith_connecting_cohomology",
    "smith_connecting_homology",
    "euler_power",
    "co_index",
    "yang_index",
    "involution_on_homology",
    "z2_group_cohomology",
]

UNTWISTED = "untwisted"
TWISTED = "twisted"


def _sign(parity):
    if parity == UNTWISTED:
        return 1
    if parity == TWISTED:
        return -1
    raise ValueError(f"unknown parity {parity!r}")


def opposite(parity):
    return TWISTED if parity == UNTWISTED else UNTWISTED


@dataclass(frozen=True)
class TwistedClass:
    """A (co)homology class of the quotient, carried by explicit values.

    ``values`` are integers on the orbit representatives of ``degree`` in
    ``space``; extended by the parity rule they form a (co)cycle.
    """

    space: "EquivariantCellComplex" = field(repr=False, compare=False)
    degree: int
    parity: str
    values: tuple
    direction: str = "cohomology"
    mod2: bool = False

    def __post_init__(self):
        _sign(self.parity)
        if self.direction not in ("cohomology", "homology"):
            raise ValueError(f"unknown direction {self.direction!r}")
        vals = tuple(int(v) % 2 if self.mod2 else int(v) for v in self.values)
        if len(vals) != len(self.space.reps(self.degree)):
            raise ValueError("representative has the wrong length")
        object.__setattr__(self, "values", vals)

    def is_zero_chain(self):
        return not any(self.values)

    def __add__(self, other):
        self._compatible(other)
        return self._with([a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._compatible(other)
        return self._with([a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return self._with([-a for a in self.values])

    def __rmul__(self, k):
        return self._with([k * a for a in self.values])

    def _with(self, values):
        return TwistedClass(self.space, self.degree, self.parity, tuple(values), self.direction, self.mod2)

    def _compatible(self, other):
        same = (self.space is other.space and self.degree == other.degree and self.parity == other.parity
                and self.direction == other.direction and self.mod2 == other.mod2)
        if not same:
            raise ValueError("classes live in different groups")

    def reduce_mod2(self):
        return TwistedClass(self.space, self.degree, self.parity, self.values, self.direction, True)

    def support(self):
        """Mapping from representative cell labels to nonzero values."""
        reps = self.space.reps(self.degree)
        return {self.space.label(self.degree, r): v for r, v in zip(reps, self.values) if v}

    def full_values(self):
        """Values on every cell of the degree, extended by the parity rule."""
        return self.space.extend(self.degree, self.values, self.parity)

    def order(self):
        return self.space.class_order(self)

    def is_trivial(self):
        return self.order() == 1

    def to_json(self):
        return {
            "degree": self.degree,
            "parity": self.parity,
            "direction": self.direction,
            "mod2": self.mod2,
            "support": [[_json_label(k), v] for k, v in sorted(self.support().items(), key=lambda kv: repr(kv[0]))],
        }


def _json_label(x):
    if isinstance(x, tuple):
        return [_json_label(y) for y in x]
    return x


class EquivariantCellComplex:
    """Finite cell complex with a free cellular involution.

    Parameters are given per degree d:

    * ``cells[d]``: list of hashable cell labels, in basis order;
    * ``boundary[d]``: for each cell, a dict ``face index -> coefficient``
      into degree d-1 (omit degree 0);
    * ``involution[d]``: for each cell, ``(image index, sign)``.

    Orbit representatives default to the member of each orbit that comes
    first in the basis order.  The complex checks its own invariants:
    the involution is free and squares to +1, it commutes with the
    boundary, and the boundary squares to zero.
    """

    def __init__(self, cells, boundary, involution, reps=None, check=True):
        degs = sorted(d for d in cells if cells[d])
        self._cells = {d: tuple(cells[d]) for d in degs}
        self._index = {d: {c: i for i, c in enumerate(self._cells[d])} for d in degs}
        self._bnd = {}
        for d in degs:
            if d == 0:
                self._bnd[d] = None
            elif d - 1 not in self._cells:
                if any(boundary.get(d, ())):
                    raise ValueError(f"cells of degree {d} have faces in an empty degree")
                self._bnd[d] = [{} for _ in self._cells[d]]
            else:
                self._bnd[d] = [dict(b) for b in boundary[d]]
        self._inv = {d: [tuple(x) for x in involution[d]] for d in degs}
        if reps is None:
            reps = {d: [i for i, (j, _) in enumerate(self._inv[d]) if i < j] for d in degs}
        self._reps = {d: tuple(sorted(reps.get(d, ()))) for d in degs}
        self._orbit = {}
        for d in degs:
            info = {}
            for pos, r in enumerate(self._reps[d]):
                j, s = self._inv[d][r]
                info[r] = (pos, 1, True)
                info[j] = (pos, s, False)
            self._orbit[d] = info
        self._cache = {}
        if check:
            self.check()

    # ------------------------------------------------------------------ access

    def degrees(self):
        return sorted(self._cells)

    @property
    def dimension(self):
        return max(self._cells) if self._cells else -1

    def cells(self, d):
        return self._cells.get(d, ())

    def label(self, d, i):
        return self._cells[d][i]

    def index(self, d, label):
        return self._index[d][label]

    def size(self):
        return sum(len(c) for c in self._cells.values())

    def count(self, d):
        return len(self._cells.get(d, ()))

    def boundary_of(self, d, i):
        if d == 0 or d not in self._bnd or self._bnd[d] is None:
            return {}
        return self._bnd[d][i]

    def involution(self, d, i):
        return self._inv[d][i]

    def reps(self, d):
        return self._reps.get(d, ())

    def orbit_info(self, d, i):
        """(position of the orbit's representative, sign, is_representative)."""
        return self._orbit[d][i]

    def euler_characteristic(self):
        return sum((-1) ** d * len(c) for d, c in self._cells.items())

    def __repr__(self):
        counts = [self.count(d) for d in range(self.dimension + 1)]
        return f"EquivariantCellComplex(cells per degree {counts})"

    # ------------------------------------------------------------------ checks

    def check(self):
        for d in self.degrees():
            n = self.count(d)
            if len(self._inv[d]) != n:
                raise ValueError(f"involution table of degree {d} has the wrong length")
            for i, (j, s) in enumerate(self._inv[d]):
                if j == i:
                    raise ValueError(f"cell {self._cells[d][i]!r} is fixed by the involution")
                if s not in (1, -1):
                    raise ValueError("involution signs must be +-1")
                k, s2 = self._inv[d][j]
                if k != i or s * s2 != 1:
                    raise ValueError(f"involution does not square to +1 at {self._cells[d][i]!r}")
            if len(self._orbit[d]) != n:
                raise ValueError(f"orbit representatives in degree {d} do not cover every orbit once")
        for d in self.degrees():
            if d == 0:
                continue
            for i in range(self.count(d)):
                b = self.boundary_of(d, i)
                # d o d = 0
                acc = {}
                for f, a in b.items():
                    for g, c in self.boundary_of(d - 1, f).items():
                        acc[g] = acc.get(g, 0) + a * c
                if any(acc.values()):
                    raise ValueError(f"boundary of boundary is nonzero at {self._cells[d][i]!r}")
                # t o d = d o t
                lhs = {}
                for f, a in b.items():
                    g, s = self._inv[d - 1][f]
                    lhs[g] = lhs.get(g, 0) + s * a
                j, s = self._inv[d][i]
                rhs = {g: s * c for g, c in self.boundary_of(d, j).items()}
                if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                    raise ValueError(f"involution does not commute with the boundary at {self._cells[d][i]!r}")
        return True

    # ------------------------------------------------------------- complexes

    def chain_complex(self):
        """Ordinary integer chains of the total space."""
        if "chains" in self._cache:
            return self._cache["chains"]
        maps = {}
        for d in self.degrees():
            if d == 0 or d - 1 not in self._cells:
                continue
            maps[d] = IntMatrix(self.count(d - 1), self.count(d), self._bnd[d])
        cc = ChainComplex(self._cells, maps)
        self._cache["chains"] = cc
        return cc

    def homology(self, i, coeffs="Z"):
        return self.chain_complex().homology(i, coeffs)

    def quotient_boundary(self, d, parity, mod2=False):
        """Boundary from degree d to d-1 of the quotient of the given parity."""
        key = ("qb", d, parity, mod2)
        if key in self._cache:
            return self._cache[key]
        eps = _sign(parity)
        rows = len(self.reps(d - 1))
        cols = []
        for r in self.reps(d):
            col = {}
            for f, a in self.boundary_of(d, r).items():
                pos, s, is_rep = self._orbit[d - 1][f]
                col[pos] = col.get(pos, 0) + (a if is_rep else a * s * eps)
            if mod2:
                col = {k: v % 2 for k, v in col.items()}
            cols.append(col)
        A = IntMatrix(rows, len(cols), cols)
        self._cache[key] = A
        return A

    def lifted_boundary(self, d):
        """Integer boundary of rep-supported chains, read off on representatives."""
        key = ("lb", d)
        if key in self._cache:
            return self._cache[key]
        rows = len(self.reps(d - 1))
        cols = []
        for r in self.reps(d):
            col = {}
            for f, a in self.boundary_of(d, r).items():
                pos, _, is_rep = self._orbit[d - 1][f]
                if is_rep:
                    col[pos] = col.get(pos, 0) + a
            cols.append(col)
        A = IntMatrix(rows, len(cols), cols)
        self._cache[key] = A
        return A

    def twisted_chain_complex(self, parity, mod2=False):
        bases = {d: [self._cells[d][r] for r in self.reps(d)] for d in self.degrees()}
        maps = {d: self.quotient_boundary(d, parity, mod2) for d in self.degrees() if d - 1 in self._cells}
        return ChainComplex(bases, maps)

    def twisted_cochain_complex(self, parity, mod2=False):
        return self.twisted_chain_complex(parity, mod2).transpose()

    def twisted_cohomology(self, i, parity, coeffs="Z"):
        return self.twisted_cochain_complex(parity, coeffs == "Z2").homology(i, coeffs)

    def twisted_homology(self, i, parity, coeffs="Z"):
        return self.twisted_chain_complex(parity, coeffs == "Z2").homology(i, coeffs)

    # ---------------------------------------------------------- cochain data

    def extend(self, d, values, parity):
        """Extend values on representatives to all cells by the parity rule."""
        eps = _sign(parity)
        out = [0] * self.count(d)
        for i in range(self.count(d)):
            pos, s, is_rep = self._orbit[d][i]
            out[i] = values[pos] if is_rep else s * eps * values[pos]
        return out

    def restrict(self, d, full):
        return [full[r] for r in self.reps(d)]

    def unit(self):
        return TwistedClass(self, 0, UNTWISTED, (1,) * len(self.reps(0)))

    def cochain(self, degree, parity, values, mod2=False):
        """Build a cohomology class from a dict label -> value or a list on reps."""
        if isinstance(values, dict):
            vals = [0] * len(self.reps(degree))
            eps = _sign(parity)
            for lab, v in values.items():
                i = self._index[degree][lab]
                pos, s, is_rep = self._orbit[degree][i]
                vals[pos] += v if is_rep else s * eps * v
            values = vals
        return TwistedClass(self, degree, parity, tuple(values), "cohomology", mod2)

    def chain(self, degree, parity, values, mod2=False):
        if isinstance(values, dict):
            vals = [0] * len(self.reps(degree))
            eps = _sign(parity)
            for lab, v in values.items():
                i = self._index[degree][lab]
                pos, s, is_rep = self._orbit[degree][i]
                vals[pos] += v if is_rep else s * eps * v
            values = vals
        return TwistedClass(self, degree, parity, tuple(values), "homology", mod2)

    def is_cycle(self, c):
        """Whether the class representative is a (co)cycle of its complex."""
        if c.direction == "cohomology":
            A = self.quotient_boundary(c.degree + 1, c.parity, c.mod2).T
        else:
            A = self.quotient_boundary(c.degree, c.parity, c.mod2)
        if A.ncols == 0:
            return True
        out = A.apply(list(c.values))
        return not any(v % 2 if c.mod2 else v for v in out)

    def image_matrix(self, c):
        """The (co)boundary matrix whose column span is the trivial classes."""
        if c.direction == "cohomology":
            return self.quotient_boundary(c.degree, c.parity, c.mod2).T if c.degree - 1 in self._cells \
                else IntMatrix(len(self.reps(c.degree)), 0)
        if c.degree + 1 in self._cells:
            return self.quotient_boundary(c.degree + 1, c.parity, c.mod2)
        return IntMatrix(len(self.reps(c.degree)), 0)

    def class_order(self, c):
        """Order of the class; for mod-2 classes this is 1 or 2."""
        if not self.is_cycle(c):
            raise ValueError("representative is not a (co)cycle")
        if c.is_zero_chain():
            return 1
        A = self.image_matrix(c)
        if c.mod2:
            return 1 if in_span_mod2(A, list(c.values)) else 2
        return class_order(A, list(c.values))

    # ----------------------------------------------------------- variants

    def with_reps(self, choose):
        """Same complex, with ``choose(d, i, j)`` picking between orbit members i, j."""
        reps = {}
        for d in self.degrees():
            chosen = []
            for r in self.reps(d):
                j, _ = self._inv[d][r]
                chosen.append(choose(d, r, j))
            reps[d] = chosen
        return EquivariantCellComplex(
            self._cells, {d: self._bnd[d] for d in self.degrees() if d}, self._inv, reps, check=False)

    def relative(self, drop):
        """Quotient by an invariant subcomplex given as {degree: set of labels}."""
        cells, bnd, inv = {}, {}, {}
        for d in self.degrees():
            gone = drop.get(d, set())
            keep = [i for i, c in enumerate(self._cells[d]) if c not in gone]
            cells[d] = [self._cells[d][i] for i in keep]
        newidx = {d: {c: i for i, c in enumerate(cells[d])} for d in cells}
        for d in self.degrees():
            inv[d] = []
            bnd[d] = []
            for c in cells[d]:
                i = self._index[d][c]
                j, s = self._inv[d][i]
                jl = self._cells[d][j]
                if jl not in newidx[d]:
                    raise ValueError("dropped cells are not invariant")
                inv[d].append((newidx[d][jl], s))
                if d:
                    b = {}
                    for f, a in self.boundary_of(d, i).items():
                        fl = self._cells[d - 1][f]
                        if fl in newidx.get(d - 1, {}):
                            b[newidx[d - 1][fl]] = a
                    bnd[d].append(b)
            for c in drop.get(d, set()):
                i = self._index[d][c]
                for f in self.boundary_of(d, i):
                    if self._cells[d - 1][f] not in drop.get(d - 1, set()):
                        raise ValueError("dropped cells do not form a subcomplex")
        return EquivariantCellComplex(cells, bnd, inv)


# ---------------------------------------------------------------------------
# constructions


def _disjoint_pairs(first, second):
    out = []
    for s in first:
        ss = set(s)
        for t in second:
            if ss.isdisjoint(t):
                out.append((s, t))
    return out


def _product_complex(pairs):
    """Cells sigma x tau with the product boundary and the swap involution."""
    by_deg = {}
    for s, t in pairs:
        by_deg.setdefault(len(s) + len(t) - 2, []).append((s, t))
    cells = {d: sorted(v) for d, v in by_deg.items()}
    index = {d: {c: i for i, c in enumerate(v)} for d, v in cells.items()}
    boundary, involution = {}, {}
    for d, cs in cells.items():
        involution[d] = [(index[d][(t, s)], -1 if (len(s) - 1) * (len(t) - 1) % 2 else 1) for s, t in cs]
        if d == 0:
            continue
        idx = index.get(d - 1, {})
        bl = []
        for s, t in cs:
            b = {}
            for f, a in _faces(s):
                b[idx[(f, t)]] = a
            sgn = -1 if (len(s) - 1) % 2 else 1
            for f, a in _faces(t):
                b[idx[(s, f)]] = sgn * a
            bl.append(b)
        boundary[d] = bl
    return EquivariantCellComplex(cells, boundary, involution)


def deleted_product(K):
    """Simplicial deleted product: ordered pairs of disjoint simplices.

    >>> from .simplicial import SimplicialComplex
    >>> E = deleted_product(SimplicialComplex.from_facets([(0, 1)]))
    >>> E.cells(0), E.involution(0, 0)
    ((((0,), (1,)), ((1,), (0,))), (1, 1))
    """
    simp = K.simplices()
    return _product_complex(_disjoint_pairs(simp, simp))


def relative_deleted_product(K, Y):
    """Cells A x B of disjoint simplices of Y with A or B in K."""
    if not K.is_subcomplex_of(Y):
        raise ValueError("K is not a subcomplex of Y")
    ys = Y.simplices()
    pairs = [(a, b) for a, b in _disjoint_pairs(ys, ys) if a in K or b in K]
    return _product_complex(pairs)


def _perm_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def from_simplicial_involution(K, vertex_map):
    """Equivariant complex of K under a free simplicial involution of its vertices."""
    cells = {d: K.simplices(d) for d in range(K.dimension + 1)}
    index = {d: {c: i for i, c in enumerate(v)} for d, v in cells.items()}
    involution, boundary = {}, {}
    for d, cs in cells.items():
        inv = []
        for s in cs:
            img = [vertex_map[v] for v in s]
            tgt = tuple(sorted(img))
            if tgt not in index[d]:
                raise ValueError("vertex map does not preserve the complex")
            inv.append((index[d][tgt], _perm_sign(img)))
        involution[d] = inv
        if d:
            boundary[d] = [{index[d - 1][f]: a for f, a in _faces(s)} for s in cs]
    return EquivariantCellComplex(cells, boundary, involution)


# ---------------------------------------------------------------------------
# Smith connecting maps and Euler classes


def smith_connecting_cohomology(E, c):
    """Connecting map H^i(parity) -> H^{i+1}(opposite parity); cup with the Euler class.

    The representative, put on orbit representatives and zero elsewhere,
    is an integer cochain h.  Its coboundary is automatically of the
    opposite parity, and its values on representatives are returned.
    """
    if c.direction != "cohomology":
        raise ValueError("expected a cohomology class")
    if not E.is_cycle(c):
        raise ValueError("input is not a cocycle")
    d = c.degree + 1
    if d in E._cells and c.degree in E._cells:
        vals = E.lifted_boundary(d).T.apply(list(c.values))
    else:
        vals = [0] * len(E.reps(d))
    out = TwistedClass(E, d, opposite(c.parity), tuple(vals), "cohomology", c.mod2)
    if not E.is_cycle(out):
        raise AssertionError("connecting map produced a non-cocycle")
    return out


def smith_connecting_homology(E, z):
    """Connecting map H_i(parity) -> H_{i-1}(opposite parity); cap with the Euler class.

    The quotient cycle is lifted to the integer chain on orbit
    representatives.  Its boundary equals y - (parity) t y for a unique
    chain y on the representatives, which is read off by restriction.
    """
    if z.direction != "homology":
        raise ValueError("expected a homology class")
    if not E.is_cycle(z):
        raise ValueError("input is not a cycle")
    d = z.degree - 1
    if d in E._cells and z.degree in E._cells:
        vals = E.lifted_boundary(z.degree).apply(list(z.values))
    else:
        vals = [0] * len(E.reps(d)) if d in E._cells else []
    out = TwistedClass(E, d, opposite(z.parity), tuple(vals), "homology", z.mod2)
    if not E.is_cycle(out):
        raise AssertionError("connecting map produced a non-cycle")
    return out


def euler_power(E, k, mod2=False):
    """k-th power of the Euler class, from the unit 0-cocycle."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if E.count(0) == 0:
        raise ValueError("empty complex has no unit class")
    c = E.unit()
    if mod2:
        c = c.reduce_mod2()
    for _ in range(k):
        c = smith_connecting_cohomology(E, c)
    return c


def _index(E, mod2):
    if E.count(0) == 0:
        return -1
    c = E.unit()
    if mod2:
        c = c.reduce_mod2()
    best = 0 if E.class_order(c) != 1 else -1
    k = 0
    while k < E.dimension:
        c = smith_connecting_cohomology(E, c)
        k += 1
        if E.class_order(c) == 1:
            break
        best = k
    return best


def co_index(E):
    """Largest k with the k-th Euler power nonzero over the integers."""
    return _index(E, False)


def yang_index(E):
    """Largest k with the k-th power of the mod-2 Euler class nonzero."""
    return _index(E, True)


# ---------------------------------------------------------------------------
# the involution on homology and Z/2 group cohomology


@dataclass(frozen=True)
class GroupAction:
    """An endomorphism of Z^a + Z/d1 + ... given on generators.

    ``orders[j]`` is 0 for a free generator and d for a Z/d generator;
    column j of ``matrix`` is the image of generator j.
    """

    orders: tuple
    matrix: tuple

    def group(self):
        return AbelianGroup.from_invariants(sum(1 for o in self.orders if o == 0),
                                            [o for o in self.orders if o])

    def compose_square_is_identity(self):
        q = len(self.orders)
        T = self.matrix
        for j in range(q):
            for i in range(q):
                v = sum(T[i][k] * T[k][j] for k in range(q)) - (1 if i == j else 0)
                o = self.orders[i]
                if (v % o) if o else v:
                    return False
        return True


def involution_on_homology(E, i):
    """Matrix of t_* on H_i(E; Z) in a basis of generators of the group."""
    cc = E.chain_complex()
    Z = integer_kernel(cc.outgoing(i))
    n = E.count(i)
    k = len(Z)
    if k == 0:
        return GroupAction((), ())
    Zm = IntMatrix.from_columns(n, Z)
    B = cc.incoming(i)
    Y = []
    for j in range(B.ncols):
        y = solve_integer(Zm, B.dense_column(j))
        if y is None:
            raise AssertionError("boundary is not a cycle")
        Y.append(y)
    Ym = IntMatrix.from_columns(k, Y) if Y else IntMatrix(k, 0)
    diag, P, Pi, _, _ = _smith_dense(Ym.to_rows(), k, Ym.ncols)
    diag = diag + [0] * (k - len(diag))
    keep = [j for j in range(k) if diag[j] != 1]
    orders = tuple(diag[j] for j in keep)
    # generator j is Z * Pinv e_j
    gens = []
    for j in keep:
        coeffs = [Pi[r][j] for r in range(k)]
        gens.append([sum(Z[c][x] * coeffs[c] for c in range(k)) for x in range(n)])
    cols = []
    for g in gens:
        tg = [0] * n
        for x, v in enumerate(g):
            if v:
                y, s = E.involution(i, x)
                tg[y] += s * v
        w = solve_integer(Zm, tg)
        new = [sum(P[r][c] * w[c] for c in range(k)) for r in range(k)]
        col = []
        for j in keep:
            o = diag[j]
            col.append(new[j] % o if o else new[j])
        cols.append(col)
    q = len(keep)
    T = tuple(tuple(cols[j][i] for j in range(q)) for i in range(q))
    act = GroupAction(orders, T)
    if not act.compose_square_is_identity():
        raise AssertionError("induced map is not an involution")
    return act


def _lattice_basis(gens, q):
    """A basis of the lattice spanned by the given vectors in Z^q."""
    if not gens:
        return []
    G = IntMatrix.from_columns(q, gens)
    snf = smith_normal_form(G)
    return [[snf.U[i, j] * d for i in range(q)] for j, d in enumerate(snf.diagonal) if d]


def _subquotient(q, orders, num_map, den_map):
    """{x : num_map x in R} / (den_map Z^q + R) with R = relations of the orders."""
    rel = [[o if i == j else 0 for i in range(q)] for j, o in enumerate(orders) if o]
    # kernel of [num | -R], projected to x
    cols = [[num_map[i][j] for i in range(q)] for j in range(q)] + [[-v for v in r] for r in rel]
    M = IntMatrix.from_columns(q, cols)
    ker = integer_kernel(M)
    K = _lattice_basis([v[:q] for v in ker], q)
    if not K:
        return AbelianGroup.trivial()
    Km = IntMatrix.from_columns(q, K)
    den = [[den_map[i][j] for i in range(q)] for j in range(q)] + rel
    Y = []
    for v in den:
        y = solve_integer(Km, v)
        if y is None:
            raise AssertionError("denominator is not inside the numerator lattice")
        Y.append(y)
    return cokernel(IntMatrix.from_columns(len(K), Y))


def z2_group_cohomology(action):
    """(H^0, H^1) of Z/2 with coefficients in the module described by ``action``.

    H^0 is the invariants ker(1 - t) and H^1 = ker(1 + t) / im(1 - t).

    >>> z2_group_cohomology(GroupAction((0,), ((-1,),)))[1]
    AbelianGroup(free_rank=0, torsion=(2,))
    >>> z2_group_cohomology(GroupAction((0, 0), ((0, 1), (1, 0))))[1]
    AbelianGroup(free_rank=0, torsion=())
    """
    if not action.compose_square_is_identity():
        raise ValueError("the action does not square to the identity")
    q = len(action.orders)
    if q == 0:
        return AbelianGroup.trivial(), AbelianGroup.trivial()
    T = action.matrix
    one_minus = [[(1 if i == j else 0) - T[i][j] for j in range(q)] for i in range(q)]
    one_plus = [[(1 if i == j else 0) + T[i][j] for j in range(q)] for i in range(q)]
    zero = [[0] * q for _ in range(q)]
    h0 = _subquotient(q, action.orders, one_minus, zero)
    h1 = _subquotient(q, action.orders, one_plus, one_minus)
    return h0, h1
