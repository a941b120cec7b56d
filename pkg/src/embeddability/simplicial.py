"""Finite abstract simplicial complexes and their (co)homology.

A simplex is a strictly increasing tuple of vertex labels, and that sorted
order is its positive orientation, so

    boundary [v0 ... vk] = sum_i (-1)^i [v0 ... vi-hat ... vk].

>>> K = SimplicialComplex.from_facets([(1, 2, 3)])
>>> len(K), K.dimension
(7, 2)
>>> str(K.boundary_complex().homology(1))
'Z'
"""

from itertools import combinations, permutations

from .exactalg import (
    AbelianGroup,
    IntMatrix,
    _pivots,
    rank_mod2,
)

__all__ = [
    "ChainComplex",
    "SimplicialComplex",
    "skeleton",
    "cone",
    "join",
    "parse_complex",
    "format_complex",
]

COEFFS = ("Z", "Z2")


class ChainComplex:
    """A finite free (co)chain complex.

    ``maps[d]`` is the differential leaving degree d: degree d-1 for chain
    complexes, degree d+1 for cochain complexes.  ``bases[d]`` labels the
    basis of degree d.
    """

    def __init__(self, bases, maps, cochain=False):
        self.bases = {d: tuple(b) for d, b in bases.items()}
        self.maps = dict(maps)
        self.cochain = cochain
        for d, A in self.maps.items():
            tgt = d + 1 if cochain else d - 1
            if A.shape != (self.dim(tgt), self.dim(d)):
                raise ValueError(f"differential in degree {d} has shape {A.shape}")

    def dim(self, d):
        return len(self.bases.get(d, ()))

    def degrees(self):
        return sorted(d for d in self.bases if self.bases[d])

    def outgoing(self, d):
        if d in self.maps:
            return self.maps[d]
        tgt = d + 1 if self.cochain else d - 1
        return IntMatrix(self.dim(tgt), self.dim(d))

    def incoming(self, d):
        return self.outgoing(d - 1 if self.cochain else d + 1)

    def check(self):
        """Assert that consecutive differentials compose to zero."""
        for d in self.maps:
            nxt = d + 1 if self.cochain else d - 1
            if nxt in self.maps:
                prod = self.maps[nxt] @ self.maps[d]
                if not prod.is_zero():
                    raise AssertionError(f"d o d != 0 leaving degree {d}")
        return True

    def homology(self, i, coeffs="Z"):
        """Homology at degree i (cohomology for a cochain complex)."""
        if coeffs not in COEFFS:
            raise ValueError(f"coefficients must be one of {COEFFS}")
        n = self.dim(i)
        if coeffs == "Z2":
            r_out = rank_mod2(self.outgoing(i))
            r_in = rank_mod2(self.incoming(i))
            return AbelianGroup.from_invariants(0, [2] * (n - r_out - r_in))
        r_out = len(_pivots(self.outgoing(i)))
        piv_in = _pivots(self.incoming(i))
        return AbelianGroup.from_invariants(n - r_out - len(piv_in), piv_in)

    def transpose(self):
        """The dual complex (chains become cochains and back)."""
        maps = {}
        for d, A in self.maps.items():
            tgt = d + 1 if self.cochain else d - 1
            maps[tgt] = A.T
        return ChainComplex(self.bases, maps, cochain=not self.cochain)

    def euler_characteristic(self):
        return sum((-1) ** d * len(b) for d, b in self.bases.items())


def _faces(s):
    """Codimension-one faces with their boundary signs."""
    if len(s) == 1:
        return []
    return [(s[:i] + s[i + 1:], -1 if i % 2 else 1) for i in range(len(s))]


class SimplicialComplex:
    """A finite abstract simplicial complex.

    The constructor takes any collection of simplices and closes it
    downward, so every face of a member is a member.

    >>> K5 = skeleton(4, 1)
    >>> len(K5.simplices(0)), len(K5.simplices(1))
    (5, 10)
    >>> K5.disjoint_complement((1, 2)).facets()
    [(3, 4), (3, 5), (4, 5)]
    """

    def __init__(self, simplices=()):
        closed = set()
        for s in simplices:
            s = tuple(s)
            if not s:
                continue
            if any(a >= b for a, b in zip(s, s[1:])):
                s2 = tuple(sorted(s))
                if len(set(s2)) != len(s2):
                    raise ValueError(f"repeated vertex in {s}")
                s = s2
            if s in closed:
                continue
            stack = [s]
            while stack:
                t = stack.pop()
                if t in closed:
                    continue
                closed.add(t)
                if len(t) > 1:
                    stack.extend(t[:i] + t[i + 1:] for i in range(len(t)))
        self._set = frozenset(closed)
        by_dim = {}
        for s in closed:
            by_dim.setdefault(len(s) - 1, []).append(s)
        self._by_dim = {d: tuple(sorted(v)) for d, v in by_dim.items()}
        self._cache = {}

    @classmethod
    def from_facets(cls, facets):
        """Downward closure of the given facets.

        >>> SimplicialComplex.from_facets([(1, 1)])
        Traceback (most recent call last):
        ...
        ValueError: repeated vertex in (1, 1)
        """
        facets = [tuple(f) for f in facets]
        for f in facets:
            if not f:
                raise ValueError("empty facet")
            if len(set(f)) != len(f):
                raise ValueError(f"repeated vertex in {f}")
        return cls(tuple(sorted(f)) for f in facets)

    # basic access

    @property
    def dimension(self):
        return max(self._by_dim) if self._by_dim else -1

    def simplices(self, d=None):
        if d is None:
            return [s for k in sorted(self._by_dim) for s in self._by_dim[k]]
        return list(self._by_dim.get(d, ()))

    def vertices(self):
        return [s[0] for s in self._by_dim.get(0, ())]

    def facets(self):
        covered = set()
        for s in self._set:
            covered.update(f for f, _ in _faces(s))
        return sorted(self._set - covered, key=lambda s: (len(s), s))

    def f_vector(self):
        return [len(self._by_dim.get(d, ())) for d in range(self.dimension + 1)]

    def __contains__(self, s):
        return tuple(s) in self._set

    def __iter__(self):
        return iter(self.simplices())

    def __len__(self):
        return len(self._set)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dimension}, f={self.f_vector()})"

    def is_subcomplex_of(self, other):
        return self._set <= other._set

    def euler_characteristic(self):
        return sum((-1) ** d * len(v) for d, v in self._by_dim.items())

    # chain complexes

    def chain_complex(self, reduced=False, subcomplex=None):
        """Simplicial chains; relative to ``subcomplex`` when given."""
        key = ("chains", reduced, subcomplex)
        if key in self._cache:
            return self._cache[key]
        drop = subcomplex._set if subcomplex is not None else frozenset()
        bases = {d: [s for s in v if s not in drop] for d, v in self._by_dim.items()}
        if reduced and not drop:
            bases[-1] = [()]
        index = {d: {s: i for i, s in enumerate(b)} for d, b in bases.items()}
        maps = {}
        for d, basis in bases.items():
            if d < 0 or (d == 0 and not reduced):
                continue
            if d == 0:
                maps[0] = IntMatrix(1, len(basis), [{0: 1} for _ in basis])
                continue
            idx = index.get(d - 1, {})
            cols = []
            for s in basis:
                col = {}
                for f, sign in _faces(s):
                    if f in idx:
                        col[idx[f]] = sign
                cols.append(col)
            maps[d] = IntMatrix(len(idx), len(basis), cols)
        cc = ChainComplex(bases, maps)
        self._cache[key] = cc
        return cc

    def cochain_complex(self, reduced=False, subcomplex=None):
        return self.chain_complex(reduced, subcomplex).transpose()

    def homology(self, i, coeffs="Z", reduced=False):
        """Simplicial homology; degrees outside the complex give the trivial group.

        >>> str(skeleton(4, 1).homology(1))
        'Z^6'
        """
        if i < -1:
            return AbelianGroup.trivial()
        return self.chain_complex(reduced).homology(i, coeffs)

    def cohomology(self, i, coeffs="Z", reduced=False):
        """Simplicial cohomology computed from the transposed boundaries."""
        if i < -1:
            return AbelianGroup.trivial()
        return self.cochain_complex(reduced).homology(i, coeffs)

    def relative_cohomology(self, L, i, coeffs="Z"):
        """Cohomology of the pair (self, L).

        >>> D = SimplicialComplex.from_facets([(0, 1, 2)])
        >>> str(D.relative_cohomology(D.boundary_complex(), 2))
        'Z'
        """
        if not L.is_subcomplex_of(self):
            raise ValueError("L is not a subcomplex")
        if i < 0:
            return AbelianGroup.trivial()
        return self.cochain_complex(subcomplex=L).homology(i, coeffs)

    # constructions

    def _require(self, sigma):
        sigma = tuple(sorted(sigma))
        if sigma not in self._set:
            raise ValueError(f"{sigma} is not a simplex of the complex")
        return sigma

    def link(self, sigma):
        """Simplices disjoint from sigma whose union with sigma is a simplex.

        >>> B = SimplicialComplex.from_facets([(0, 1, 2, 3)]).boundary_complex()
        >>> B.link((0,)).facets()
        [(1, 2), (1, 3), (2, 3)]
        """
        sigma = self._require(sigma)
        ss = set(sigma)
        return SimplicialComplex(
            tuple(v for v in s if v not in ss) for s in self._set if ss <= set(s) and len(s) > len(sigma)
        )

    def star(self, sigma):
        sigma = self._require(sigma)
        ss = set(sigma)
        return SimplicialComplex(s for s in self._set if ss <= set(s))

    def disjoint_complement(self, sigma):
        """Subcomplex of simplices sharing no vertex with sigma."""
        sigma = self._require(sigma)
        ss = set(sigma)
        return SimplicialComplex(s for s in self._set if ss.isdisjoint(s))

    def full_subcomplex(self, vertices):
        vs = set(vertices)
        return SimplicialComplex(s for s in self._set if vs.issuperset(s))

    def boundary_complex(self):
        """All simplices except the top-dimensional ones of a single simplex."""
        top = self.facets()
        if len(top) != 1:
            raise ValueError("boundary_complex expects a single simplex")
        return SimplicialComplex(f for f, _ in _faces(top[0]))

    def barycentric_subdivision(self, keep=None):
        """First barycentric subdivision, vertices labelled by simplices.

        With ``keep`` (a predicate on simplices, closed under faces) only the
        full subcomplex spanned by the kept barycenters is returned.
        """
        pool = [s for s in self._set if keep is None or keep(s)]
        pool_set = set(pool)
        covered = set()
        for s in pool:
            covered.update(f for f, _ in _faces(s))
        tops = [s for s in pool if s not in covered]
        flags = []
        for top in tops:
            for order in permutations(top):
                chain = []
                for k in range(1, len(order) + 1):
                    face = tuple(sorted(order[:k]))
                    if face not in pool_set:
                        break
                    chain.append(face)
                flags.append(tuple(sorted(chain)))
        return SimplicialComplex(flags)

    def puncture_complement(self, sigma):
        """A complex homotopy equivalent to the space minus the barycenter of sigma.

        It is spanned, inside the first barycentric subdivision, by the
        barycenters of simplices that do not contain sigma.
        """
        sigma = self._require(sigma)
        ss = set(sigma)
        return self.barycentric_subdivision(keep=lambda s: not ss <= set(s))

    def relabel(self, mapping):
        return SimplicialComplex(tuple(sorted(mapping[v] for v in s)) for s in self._set)

    def stellar_subdivision(self, sigma, new_vertex):
        """Subdivide sigma by a new vertex placed at its barycenter."""
        sigma = self._require(sigma)
        if (new_vertex,) in self._set:
            raise ValueError(f"label {new_vertex!r} already used")
        ss = set(sigma)
        out = []
        for s in self._set:
            if not ss <= set(s):
                out.append(s)
        for s in self._set:
            if ss <= set(s):
                rest = [v for v in s if v not in ss]
                for f, _ in _faces(sigma):
                    out.append(tuple(sorted(list(f) + rest + [new_vertex])))
                if len(sigma) == 1:
                    out.append(tuple(sorted(rest + [new_vertex])))
        return SimplicialComplex(out)

    def to_text(self):
        return format_complex(self)


def _fresh_label(labels, base="c"):
    labels = list(labels)
    if all(isinstance(v, int) for v in labels):
        return max(labels, default=0) + 1
    k = 0
    while f"{base}{k}" in labels:
        k += 1
    return f"{base}{k}"


def cone(K, apex=None):
    """Cone over K with a fresh apex (max label + 1 for integer labels)."""
    if apex is None:
        apex = _fresh_label(K.vertices())
    elif (apex,) in K:
        raise ValueError(f"apex label {apex!r} collides with a vertex")
    return SimplicialComplex([(apex,)] + [tuple(sorted(s + (apex,))) for s in K.simplices()])


def join(K, L):
    """Join of complexes on disjoint vertex sets.

    >>> three = SimplicialComplex.from_facets([(1,), (2,), (3,)])
    >>> other = SimplicialComplex.from_facets([(4,), (5,), (6,)])
    >>> len(join(three, other).simplices(1))
    9
    """
    if set(K.vertices()) & set(L.vertices()):
        raise ValueError("join needs disjoint vertex sets")
    out = list(K.simplices()) + list(L.simplices())
    out += [tuple(sorted(s + t)) for s in K.facets() for t in L.facets()]
    return SimplicialComplex(out)


def skeleton(N, n, start=1):
    """n-skeleton of the N-simplex on vertices start, ..., start + N.

    >>> skeleton(6, 2).f_vector()
    [7, 21, 35]
    """
    verts = range(start, start + N + 1)
    return SimplicialComplex(combinations(verts, min(n, N) + 1))


def _token(s):
    try:
        return int(s)
    except ValueError:
        return s


def parse_complex(text):
    """Read the facet-per-line text format.

    Labels become ints when every label in the file is an integer.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(set(toks)) != len(toks):
            raise ValueError(f"line {lineno}: repeated vertex in {toks}")
        rows.append(toks)
    as_int = all(isinstance(_token(t), int) for r in rows for t in r)
    conv = int if as_int else str
    return SimplicialComplex.from_facets([tuple(conv(t) for t in r) for r in rows])


def format_complex(K, header=None):
    lines = []
    if header:
        lines += [f"# {h}" for h in header.splitlines()]
    lines += [" ".join(str(v) for v in f) for f in K.facets()]
    return "\n".join(lines) + "\n"
