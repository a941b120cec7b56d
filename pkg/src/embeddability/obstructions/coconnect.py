"""Cohomological co-connectivity conditions for embedding in R^{2n-k}.

For an n-complex X and k >= 0 the main hypothesis asks that
H^{n-d}(X - x) = 0 for every point x and every d <= k.  One point in the
interior of each simplex suffices, and X - x is modelled by
``puncture_complement``.  Local conditions are read off from links: for x
inside an a-simplex with link L and l = n - a - 1,
H^{n-d}(X, X - x) is the reduced group H^{l-d}(L).
"""

from dataclasses import dataclass, field

from ..exactalg import AbelianGroup

Z = AbelianGroup(1, ())
ZERO = AbelianGroup(0, ())


def _point_homology(d):
    return Z if d == 0 else ZERO


def _link_data(K):
    n = K.dimension
    out = {}
    for s in K.simplices():
        L = K.link(s)
        out[s] = (L, n - len(s))
    return out


@dataclass
class CoconnectivityReport:
    n: int
    k: int
    hypothesis: bool
    i_k: bool
    ii_k_minus_1: bool
    star_table: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    embeds_in: object = None
    locus: tuple = ()
    locus_dimension: int = -1
    locus_bound_ok: object = None

    def to_json(self):
        return {
            "n": self.n,
            "k": self.k,
            "hypothesis": self.hypothesis,
            "i_k": self.i_k,
            "ii_k_minus_1": self.ii_k_minus_1,
            "star_table": [{"simplex": list(s), "holds": ok} for s, ok in self.star_table.items()],
            "failures": [{"simplex": list(s), "degree": d} for s, d in self.failures],
            "embeds_in": self.embeds_in,
            "locus_dimension": self.locus_dimension,
            "locus_bound_ok": self.locus_bound_ok,
        }


def homology_manifold_locus(K):
    """Simplices whose link lacks the homology of a sphere of the complementary dimension.

    >>> from ..simplicial import SimplicialComplex
    >>> bow = SimplicialComplex.from_facets([(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
    >>> homology_manifold_locus(bow)
    ((0,),)
    """
    out = []
    for s, (L, l) in _link_data(K).items():
        for i in range(-1, max(l, L.dimension) + 1):
            want = Z if i == l else ZERO
            if L.homology(i, reduced=True) != want:
                out.append(s)
                break
    return tuple(out)


def coconnectivity_check(K, k):
    """Check the co-connectivity hypothesis and the global/local conditions.

    >>> from ..simplicial import skeleton
    >>> r = coconnectivity_check(skeleton(4, 3), 1)
    >>> r.hypothesis, r.i_k, r.embeds_in
    (True, True, None)
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = K.dimension
    failures = []
    for s in K.simplices():
        P = K.puncture_complement(s)
        for d in range(k + 1):
            if not P.cohomology(n - d).is_trivial():
                failures.append((s, d))
                break
    hypothesis = not failures
    i_k = all(K.cohomology(n - d) == _point_homology(d) for d in range(k + 1))
    links = _link_data(K)
    ii = True
    table = {}
    for s, (L, l) in links.items():
        for d in range(k):
            if L.cohomology(l - d, reduced=True) != _point_homology(d):
                ii = False
                break
        table[s] = all(L.cohomology(j, reduced=True).is_trivial() for j in range(l - k, l))
    embeds = 2 * n - k if hypothesis and 2 * k < n - 3 else None
    locus = homology_manifold_locus(K)
    ldim = max((len(s) - 1 for s in locus), default=-1)
    bound = ldim <= n - (2 * k + 1) if ii else None
    return CoconnectivityReport(n, k, hypothesis, i_k, ii, table, failures, embeds, locus, ldim, bound)
