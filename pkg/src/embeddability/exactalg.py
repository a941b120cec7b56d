"""Exact integer linear algebra.

Everything here works with plain Python ints, so nothing can overflow.
Two kinds of routines live side by side:

* a sparse elimination that only keeps track of the diagonal it produces.
  This is what homology and class-order queries use, and it copes with the
  few-thousand-column boundary matrices of deleted products;
* a dense Smith normal form that also records the transforms.  It is used
  for solving systems and for kernels, where the matrices are small.

>>> A = IntMatrix.from_rows([[2, 4], [6, 8]])
>>> smith_normal_form(A).diagonal
[2, 4]
>>> cokernel(IntMatrix.from_rows([[2, 0], [0, 3]]))
AbelianGroup(free_rank=0, torsion=(6,))
>>> class_order(IntMatrix.from_rows([[2]]), [1])
2
"""

from collections import defaultdict
from dataclasses import dataclass
from math import gcd, inf, prod

__all__ = [
    "IntMatrix",
    "SnfDecomposition",
    "AbelianGroup",
    "smith_normal_form",
    "elementary_divisors",
    "solve_integer",
    "integer_kernel",
    "cokernel",
    "class_order",
    "rank",
    "rank_mod2",
    "in_span_mod2",
]


class IntMatrix:
    """Sparse integer matrix, stored column by column.

    Each column is a dict ``row -> value`` holding only nonzero entries.
    Instances are treated as immutable.

    >>> A = IntMatrix.from_rows([[1, 0, 2], [0, 3, 0]])
    >>> A.shape, A[0, 2], A.T.shape
    ((2, 3), 2, (3, 2))
    >>> A[2, 0]
    Traceback (most recent call last):
    ...
    IndexError: entry (2, 0) outside a 2x3 matrix
    """

    __slots__ = ("nrows", "ncols", "_cols")

    def __init__(self, nrows, ncols, columns=None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        if columns is None:
            columns = [{} for _ in range(ncols)]
        if len(columns) != ncols:
            raise ValueError("wrong number of columns")
        cols = []
        for c in columns:
            clean = {}
            for i, v in c.items():
                if not 0 <= i < nrows:
                    raise IndexError(f"row {i} outside a matrix with {nrows} rows")
                if not isinstance(v, int):
                    raise TypeError("entries must be integers")
                if v:
                    clean[i] = v
            cols.append(clean)
        self._cols = tuple(cols)

    @classmethod
    def from_rows(cls, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        cols = [{} for _ in range(ncols)]
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(r):
                if v:
                    cols[j][i] = int(v)
        return cls(len(rows), ncols, cols)

    @classmethod
    def from_columns(cls, nrows, columns):
        """Build from columns given as dicts or as dense lists."""
        cols = []
        for c in columns:
            if isinstance(c, dict):
                cols.append(c)
            else:
                if len(c) != nrows:
                    raise ValueError("column has the wrong length")
                cols.append({i: int(v) for i, v in enumerate(c) if v})
        return cls(nrows, len(cols), cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry ({i}, {j}) outside a {self.nrows}x{self.ncols} matrix")
        return self._cols[j].get(i, 0)

    def column(self, j):
        if not 0 <= j < self.ncols:
            raise IndexError(f"column {j} outside a matrix with {self.ncols} columns")
        return dict(self._cols[j])

    def columns(self):
        return [dict(c) for c in self._cols]

    def dense_column(self, j):
        c = self._cols[j]
        return [c.get(i, 0) for i in range(self.nrows)]

    def to_rows(self):
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self._cols):
            for i, v in c.items():
                rows[i][j] = v
        return rows

    @property
    def T(self):
        cols = [{} for _ in range(self.nrows)]
        for j, c in enumerate(self._cols):
            for i, v in c.items():
                cols[i][j] = v
        return IntMatrix(self.ncols, self.nrows, cols)

    def nnz(self):
        return sum(len(c) for c in self._cols)

    def is_zero(self):
        return not any(self._cols)

    def apply(self, x):
        """Matrix times a dense vector."""
        if len(x) != self.ncols:
            raise ValueError(f"vector of length {len(x)} for a matrix with {self.ncols} columns")
        out = [0] * self.nrows
        for j, c in enumerate(self._cols):
            xj = x[j]
            if xj:
                for i, v in c.items():
                    out[i] += v * xj
        return out

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = []
        for c in other._cols:
            acc = defaultdict(int)
            for k, w in c.items():
                for i, v in self._cols[k].items():
                    acc[i] += v * w
            cols.append({i: v for i, v in acc.items() if v})
        return IntMatrix(self.nrows, other.ncols, cols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        cols = []
        for a, b in zip(self._cols, other._cols):
            c = dict(a)
            for i, v in b.items():
                c[i] = c.get(i, 0) + v
            cols.append(c)
        return IntMatrix(self.nrows, self.ncols, cols)

    def __neg__(self):
        return IntMatrix(self.nrows, self.ncols, [{i: -v for i, v in c.items()} for c in self._cols])

    def __sub__(self, other):
        return self + (-other)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        return IntMatrix(self.nrows, self.ncols + other.ncols, list(self._cols) + list(other._cols))

    def select_columns(self, idx):
        return IntMatrix(self.nrows, len(idx), [self._cols[j] for j in idx])

    def reduce_mod(self, p):
        return IntMatrix(self.nrows, self.ncols,
                         [{i: v % p for i, v in c.items() if v % p} for c in self._cols])

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._cols == other._cols

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(sorted(c.items())) for c in self._cols)))

    def __repr__(self):
        if self.nrows * self.ncols <= 64:
            return f"IntMatrix.from_rows({self.to_rows()!r}, ncols={self.ncols})"
        return f"<IntMatrix {self.nrows}x{self.ncols}, {self.nnz()} nonzeros>"


def _as_matrix(A):
    if isinstance(A, IntMatrix):
        return A
    return IntMatrix.from_rows(A)


def _column_vector(A, b):
    b = [int(v) for v in b]
    if len(b) != A.nrows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {A.nrows} rows")
    return b


# ----------------------------------------------------------------------------
# abelian groups


def _chain(values):
    """Turn a multiset of positive ints into a divisibility chain (gcd/lcm moves)."""
    vals = sorted(abs(v) for v in values if abs(v) > 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                a, b = vals[i], vals[j]
                if b % a:
                    g = gcd(a, b)
                    vals[i], vals[j] = g, a // g * b
                    changed = True
        vals = sorted(v for v in vals if v > 1)
    return vals


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group in invariant-factor form.

    Build through :meth:`from_invariants` to get the canonical form.

    >>> AbelianGroup.from_invariants(1, [2, 3])
    AbelianGroup(free_rank=1, torsion=(6,))
    >>> str(AbelianGroup.from_invariants(2, [2, 4]))
    'Z^2 + Z/2 + Z/4'
    """

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        t = tuple(self.torsion)
        if any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain of factors >= 2")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_invariants(cls, free_rank, factors=()):
        return cls(free_rank, tuple(_chain(factors)))

    @classmethod
    def trivial(cls):
        return cls(0, ())

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def order(self):
        """Number of elements (``inf`` when there is a free part)."""
        return inf if self.free_rank else prod(self.torsion)

    def without_odd_torsion(self):
        """Quotient by the odd-order torsion subgroup."""
        twos = []
        for d in self.torsion:
            k = 1
            while d % 2 == 0:
                d //= 2
                k *= 2
            twos.append(k)
        return AbelianGroup.from_invariants(self.free_rank, twos)

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "text": str(self)}


# ----------------------------------------------------------------------------
# sparse diagonalization


def _xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


class _Eliminator:
    """Working copy of a matrix for diagonalization by unimodular moves."""

    def __init__(self, columns):
        self.cols = {}
        self.rows = defaultdict(set)
        for j, c in enumerate(columns):
            c = {i: v for i, v in c.items() if v}
            if c:
                self.cols[j] = c
                for i in c:
                    self.rows[i].add(j)

    def _set(self, col, j, i, v):
        if v:
            if i not in col:
                self.rows[i].add(j)
            col[i] = v
        elif i in col:
            del col[i]
            self.rows[i].discard(j)

    def _axpy(self, k, f, j):
        """column k -= f * column j"""
        ck = self.cols[k]
        for i, v in self.cols[j].items():
            self._set(ck, k, i, ck.get(i, 0) - f * v)
        if not ck:
            del self.cols[k]

    def _drop_pivot(self, i, j):
        for r in self.cols.pop(j):
            self.rows[r].discard(j)
        self.rows.pop(i, None)

    def unit_pass(self):
        """Eliminate every available +-1 pivot; return how many were used."""
        count = 0
        progress = True
        while progress:
            progress = False
            for j in sorted(self.cols):
                c = self.cols.get(j)
                if not c:
                    continue
                units = [i for i, v in c.items() if v == 1 or v == -1]
                if not units:
                    continue
                i = min(units, key=lambda r: (len(self.rows[r]), r))
                p = c[i]
                for k in sorted(self.rows[i] - {j}):
                    self._axpy(k, self.cols[k][i] * p, j)
                self._drop_pivot(i, j)
                count += 1
                progress = True
        return count

    def general_pivot(self):
        """Diagonalize around the smallest entry; return its absolute value."""
        best = None
        for j, c in self.cols.items():
            for i, v in c.items():
                key = (abs(v), len(self.rows[i]) * len(c), j, i)
                if best is None or key < best:
                    best = key
        _, _, j, i = best
        while True:
            # clear row i with column moves
            for k in sorted(self.rows[i] - {j}):
                a = self.cols[j][i]
                b = self.cols[k][i]
                if b % a == 0:
                    self._axpy(k, b // a, j)
                else:
                    g, s, t = _xgcd(a, b)
                    cj, ck = self.cols[j], self.cols[k]
                    new_j, new_k = {}, {}
                    for r in set(cj) | set(ck):
                        x, y = cj.get(r, 0), ck.get(r, 0)
                        u = s * x + t * y
                        w = (b // g) * x - (a // g) * y
                        if u:
                            new_j[r] = u
                        if w:
                            new_k[r] = w
                    for r in cj:
                        self.rows[r].discard(j)
                    for r in ck:
                        self.rows[r].discard(k)
                    self.cols[j] = new_j
                    for r in new_j:
                        self.rows[r].add(j)
                    if new_k:
                        self.cols[k] = new_k
                        for r in new_k:
                            self.rows[r].add(k)
                    else:
                        del self.cols[k]
            a = self.cols[j][i]
            bad = [r for r, v in self.cols[j].items() if r != i and v % a]
            if not bad:
                self._drop_pivot(i, j)
                return abs(a)
            # combine rows i and r; row i holds only the pivot at this point
            r = min(bad)
            b = self.cols[j][r]
            g, s, t = _xgcd(a, b)
            for k in sorted(self.rows[r] | {j}):
                ck = self.cols[k]
                x, y = ck.get(i, 0), ck.get(r, 0)
                self._set(ck, k, i, s * x + t * y)
                self._set(ck, k, r, (b // g) * x - (a // g) * y)
                if not ck:
                    del self.cols[k]

    def run(self):
        pivots = [1] * self.unit_pass()
        while self.cols:
            pivots.append(self.general_pivot())
            pivots += [1] * self.unit_pass()
        return pivots


def _pivots(A):
    return _Eliminator(A._cols).run()


def elementary_divisors(A):
    """Nonzero diagonal entries of the Smith form of ``A``, in chain order.

    >>> elementary_divisors(IntMatrix.from_rows([[2, 4], [6, 8]]))
    [2, 4]
    """
    A = _as_matrix(A)
    piv = _pivots(A)
    chain = _chain(piv)
    return [1] * (len(piv) - len(chain)) + chain


def rank(A):
    return len(_pivots(_as_matrix(A)))


def cokernel(A):
    """The group Z^rows / (column span of A), in canonical form.

    >>> cokernel(IntMatrix(1, 0))
    AbelianGroup(free_rank=1, torsion=())
    """
    A = _as_matrix(A)
    piv = _pivots(A)
    return AbelianGroup.from_invariants(A.nrows - len(piv), piv)


def class_order(A, b):
    """Smallest k >= 1 with k*b in the column span of A, or ``inf``.

    The order of b in coker(A) is the ratio of the torsion orders of
    coker(A) and coker(A | b) once both have the same rank.

    >>> class_order(IntMatrix.from_rows([[0]]), [1])
    inf
    >>> class_order(IntMatrix.identity(1), [5])
    1
    """
    A = _as_matrix(A)
    b = _column_vector(A, b)
    if not any(b):
        return 1
    pa = _pivots(A)
    bcol = {i: v for i, v in enumerate(b) if v}
    pb = _Eliminator(list(A._cols) + [bcol]).run()
    if len(pb) > len(pa):
        return inf
    return prod(pa) // prod(pb)


# ----------------------------------------------------------------------------
# arithmetic mod 2


def _bits(col):
    v = 0
    for i, x in col.items():
        if x % 2:
            v |= 1 << i
    return v


def _rank_bits(vectors, basis=None):
    basis = {} if basis is None else basis
    r = 0
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            if h in basis:
                v ^= basis[h]
            else:
                basis[h] = v
                r += 1
                break
    return r


def rank_mod2(A):
    A = _as_matrix(A)
    return _rank_bits(_bits(c) for c in A._cols)


def in_span_mod2(A, b):
    """Whether b reduced mod 2 lies in the GF(2) column span of A."""
    A = _as_matrix(A)
    b = _column_vector(A, b)
    basis = {}
    _rank_bits((_bits(c) for c in A._cols), basis)
    v = _bits(dict(enumerate(b)))
    while v:
        h = v.bit_length() - 1
        if h not in basis:
            return False
        v ^= basis[h]
    return True


# ----------------------------------------------------------------------------
# dense Smith form with transforms


@dataclass(frozen=True)
class SnfDecomposition:
    """A = U * D * V with U, V unimodular and D diagonal with d1 | d2 | ..."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        return [self.D[i, i] for i in range(min(self.D.shape))]

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d)


def _identity_rows(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _smith_dense(a, m, n):
    """Smith form of the dense m x n matrix ``a`` (modified in place).

    Returns (diag, P, Pinv, Q, Qinv) with P*A*Q = D.
    """
    P, Pi, Q, Qi = _identity_rows(m), _identity_rows(m), _identity_rows(n), _identity_rows(n)

    def row_axpy(i, q, t):  # row_i -= q * row_t
        if not q:
            return
        ai, at = a[i], a[t]
        for c in range(n):
            if at[c]:
                ai[c] -= q * at[c]
        pi, pt = P[i], P[t]
        for c in range(m):
            if pt[c]:
                pi[c] -= q * pt[c]
        for row in Pi:  # column t of Pinv += q * column i
            if row[i]:
                row[t] += q * row[i]

    def col_axpy(j, q, t):  # col_j -= q * col_t
        if not q:
            return
        for row in a:
            if row[t]:
                row[j] -= q * row[t]
        for row in Q:
            if row[t]:
                row[j] -= q * row[t]
        qj, qt = Qi[j], Qi[t]  # row t of Qinv += q * row j
        for c in range(n):
            if qj[c]:
                qt[c] += q * qj[c]

    def swap_rows(i, t):
        if i != t:
            a[i], a[t] = a[t], a[i]
            P[i], P[t] = P[t], P[i]
            for row in Pi:
                row[i], row[t] = row[t], row[i]

    def swap_cols(j, t):
        if j != t:
            for row in a:
                row[j], row[t] = row[t], row[j]
            for row in Q:
                row[j], row[t] = row[t], row[j]
            Qi[j], Qi[t] = Qi[t], Qi[j]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        swap_rows(best[1], t)
        swap_cols(best[2], t)
        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    row_axpy(i, a[i][t] // p, t)
            for j in range(t + 1, n):
                if a[t][j]:
                    col_axpy(j, a[t][j] // p, t)
            rest_c = [(abs(a[i][t]), i) for i in range(t + 1, m) if a[i][t]]
            rest_r = [(abs(a[t][j]), j) for j in range(t + 1, n) if a[t][j]]
            if rest_c:
                swap_rows(min(rest_c)[1], t)
                continue
            if rest_r:
                swap_cols(min(rest_r)[1], t)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if a[i][j] % p), None)
            if bad is None:
                break
            # row t += row i brings a non-multiple into row t
            row_axpy(t, -1, bad[0])
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
            P[t] = [-v for v in P[t]]
            for row in Pi:
                row[t] = -row[t]
        t += 1
    diag = [a[i][i] for i in range(min(m, n))]
    return diag, P, Pi, Q, Qi


def smith_normal_form(A):
    """Smith normal form with transforms, A = U * D * V.

    >>> snf = smith_normal_form(IntMatrix.from_rows([[0, 0, 0], [0, 0, 0]]))
    >>> snf.diagonal
    [0, 0]
    >>> snf.U @ snf.D @ snf.V == IntMatrix.zeros(2, 3)
    True
    """
    A = _as_matrix(A)
    m, n = A.shape
    diag, _, Pi, _, Qi = _smith_dense(A.to_rows(), m, n)
    D = IntMatrix(m, n, [({j: diag[j]} if j < m and diag[j] else {}) for j in range(n)])
    return SnfDecomposition(IntMatrix.from_rows(Pi, m), D, IntMatrix.from_rows(Qi, n))


def solve_integer(A, b):
    """Some integer x with A x = b, or None when there is none.

    >>> solve_integer(IntMatrix.from_rows([[2]]), [1]) is None
    True
    >>> A = IntMatrix.from_rows([[2, 3]])
    >>> A.apply(solve_integer(A, [1]))
    [1]
    """
    A = _as_matrix(A)
    b = _column_vector(A, b)
    m, n = A.shape
    diag, P, _, Q, _ = _smith_dense(A.to_rows(), m, n)
    y = [sum(P[i][k] * b[k] for k in range(m) if b[k]) for i in range(m)]
    z = [0] * n
    for i in range(m):
        d = diag[i] if i < len(diag) else 0
        if d:
            if y[i] % d:
                return None
            z[i] = y[i] // d
        elif y[i]:
            return None
    return [sum(Q[j][k] * z[k] for k in range(n) if z[k]) for j in range(n)]


def integer_kernel(A):
    """A basis (list of integer vectors) of the kernel lattice of A.

    >>> integer_kernel(IntMatrix.from_rows([[1, 1]]))
    [[-1, 1]]
    """
    A = _as_matrix(A)
    m, n = A.shape
    diag, _, _, Q, _ = _smith_dense(A.to_rows(), m, n)
    r = sum(1 for d in diag if d)
    return [[Q[i][j] for i in range(n)] for j in range(r, n)]
