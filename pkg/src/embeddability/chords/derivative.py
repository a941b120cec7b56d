"""Type-1 invariants through their derivatives, and arrow-diagram formulas.

A type-1 invariant v is determined, up to a constant, by its derivative
v'({C, D}): the jump of v when a crossing between arcs C and D is changed.
The skew 2-chain z# = sum over ordered pairs of v'({C, D}) C x D lives in
the grid part of the configuration space.  It is a cycle exactly when the
four-term relations hold, and it avoids the removed squares exactly when
the one-term relations hold.  On the blown-up space it is completed to a
cycle z_v by a unique correction on the annuli.

Capping z_v with the Euler class decides whether v has an integral arrow
formula.  Capping twice gives the parity obstruction.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ..equivariant import TWISTED, UNTWISTED, smith_connecting_homology
from ..exactalg import IntMatrix, integer_kernel, rank, solve_integer
from .config import build_config_space, theta0


class DerivativeError(ValueError):
    """A one-term or four-term relation fails; ``witness`` names the offending cell."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class DerivativeData:
    """Integer values v'({C, D}) on unordered pairs of arcs, keyed by (min, max)."""

    diagram: object
    values: dict = field(hash=False)

    def __post_init__(self):
        clean = {}
        for (c, d), v in self.values.items():
            for a in (c, d):
                if not 0 <= a < self.diagram.n_arcs:
                    raise ValueError(f"arc {a} out of range")
            key = (min(c, d), max(c, d))
            clean[key] = clean.get(key, 0) + int(v)
        object.__setattr__(self, "values", {k: v for k, v in clean.items() if v})

    def __call__(self, c, d):
        return self.values.get((min(c, d), max(c, d)), 0)

    def __add__(self, other):
        out = dict(self.values)
        for k, v in other.values.items():
            out[k] = out.get(k, 0) + v
        return DerivativeData(self.diagram, out)

    def __neg__(self):
        return DerivativeData(self.diagram, {k: -v for k, v in self.values.items()})

    def __sub__(self, other):
        return self + (-other)

    def to_text(self):
        return "".join(f"{c} {d} {v}\n" for (c, d), v in sorted(self.values.items()))

    @classmethod
    def parse(cls, diagram, text):
        """Lines ``C D value`` with arcs numbered from 0; ``#`` starts a comment."""
        vals = {}
        for n, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            if len(line) != 3:
                raise ValueError(f"line {n}: expected 'C D value'")
            try:
                c, d, v = (int(x) for x in line)
            except ValueError as exc:
                raise ValueError(f"line {n}: expected integers") from exc
            key = (min(c, d), max(c, d))
            if key in vals:
                raise ValueError(f"line {n}: pair {key} given twice")
            vals[key] = v
        return cls(diagram, vals)


@dataclass(frozen=True)
class ArrowFormula:
    """Coefficients f(C, D) on ordered pairs of arcs and a constant term.

    With ``doubled`` set every number is stored as twice its value.
    """

    diagram: object
    coeffs: dict = field(hash=False)
    constant: int = 0
    doubled: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: v for k, v in self.coeffs.items() if v})

    def coefficient(self, c, d):
        v = self.coeffs.get((c, d), 0)
        return Fraction(v, 2) if self.doubled else Fraction(v)

    def derivative(self):
        """The values f(C, D) + f(D, C), as a dict on unordered pairs (exact rationals)."""
        out = {}
        for (c, d), _ in self.coeffs.items():
            key = (min(c, d), max(c, d))
            out[key] = self.coefficient(c, d) + self.coefficient(d, c) if c != d else self.coefficient(c, c)
        return {k: v for k, v in out.items() if v}

    def to_json(self):
        return {
            "doubled": self.doubled,
            "constant": self.constant,
            "coefficients": [[c, d, v] for (c, d), v in sorted(self.coeffs.items())],
        }

    def to_text(self):
        head = "# doubled\n" if self.doubled else ""
        return head + "".join(f"{c} {d} {v}\n" for (c, d), v in sorted(self.coeffs.items()))


# ---------------------------------------------------------------------------
# cycles


def _z_sharp(data):
    """Integer coefficients of z# on ordered pairs of distinct arcs."""
    out = {}
    for (c, d), v in data.values.items():
        out[(c, d)] = v
        if c != d:
            out[(d, c)] = v
    return out


def validate_derivative(data, E0=None):
    """Check the one- and four-term relations; return the twisted 2-cycle on theta0.

    >>> from .diagram import parse_diagram
    >>> d = parse_diagram("1 2 1 2")
    >>> validate_derivative(DerivativeData(d, {(0, 0): 1}))
    Traceback (most recent call last):
    ...
    embeddability.chords.derivative.DerivativeError: one-term relation fails on arc 0
    """
    d = data.diagram
    for (c, e), v in data.values.items():
        if c == e:
            raise DerivativeError(f"one-term relation fails on arc {c}", ("sq", c, c))
    E0 = theta0(d) if E0 is None else E0
    acc = {}
    for (c, e), v in _z_sharp(data).items():
        i = E0.index(2, ("sq", c, e))
        for f, a in E0.boundary_of(2, i).items():
            acc[f] = acc.get(f, 0) + a * v
    bad = sorted(E0.label(1, f) for f, v in acc.items() if v)
    if bad:
        raise DerivativeError(f"four-term relation fails at edge {bad[0]!r}", bad[0])
    z = E0.chain(2, TWISTED, {("sq", c, e): v for (c, e), v in data.values.items()})
    if not E0.is_cycle(z):
        raise AssertionError("skew cycle does not descend to a twisted cycle")
    return z


def _annulus_system(B):
    E = B.E
    nu1 = {E.index(1, c): i for i, c in enumerate(B.nu[1])}
    tris = [E.index(2, c) for c in B.nu[2]]
    cols = []
    for t in tris:
        cols.append({nu1[f]: a for f, a in E.boundary_of(2, t).items()})
    return nu1, tris, IntMatrix(len(nu1), len(tris), cols)


def lift_chain(B, data):
    """Integer coefficients, on every 2-cell of the blown-up space, of the lifted cycle."""
    E = B.E
    full = [0] * E.count(2)
    for (c, e), v in _z_sharp(data).items():
        if c == e:
            raise DerivativeError(f"one-term relation fails on arc {c}", ("sq", c, c))
        full[E.index(2, ("sq", c, e))] = v
    resid = {}
    for i, v in enumerate(full):
        if v:
            for f, a in E.boundary_of(2, i).items():
                resid[f] = resid.get(f, 0) + a * v
    nu1, tris, A = _annulus_system(B)
    off = [f for f, v in resid.items() if v and f not in nu1]
    if off:
        raise DerivativeError("four-term relation fails", E.label(1, off[0]))
    rhs = [0] * len(nu1)
    for f, v in resid.items():
        if f in nu1:
            rhs[nu1[f]] = -v
    y = solve_integer(A, rhs)
    if y is None:
        raise AssertionError("no correction on the annuli makes the lift a cycle")
    if rank(A) != len(tris):
        raise AssertionError("the correction on the annuli is not unique")
    for t, v in zip(tris, y):
        full[t] = v
    return full


def lift_cycle(data, B=None):
    """The skew cycle z_v on the blown-up space, as a twisted homology class."""
    B = build_config_space(data.diagram) if B is None else B
    E = B.E
    full = lift_chain(B, data)
    for i, v in enumerate(full):
        j, s = E.involution(2, i)
        if full[j] != -s * v:
            raise AssertionError("lifted cycle is not skew-invariant")
    z = E.chain(2, TWISTED, E.restrict(2, full))
    if not E.is_cycle(z):
        raise AssertionError("lifted chain is not a cycle")
    return z


def type1_basis(d, E0=None):
    """A basis of derivative data: the twisted 2-cycles of theta0."""
    E0 = theta0(d) if E0 is None else E0
    A = E0.quotient_boundary(2, TWISTED)
    out = []
    for vec in integer_kernel(A):
        vals = {}
        for pos, v in enumerate(vec):
            if v:
                _, c, e = E0.label(2, E0.reps(2)[pos])
                vals[(c, e)] = v
        out.append(DerivativeData(d, vals))
    return out


# ---------------------------------------------------------------------------
# arrow formulas


def arrow_formula_obstruction(data, B=None):
    """The cap product of z_v with the Euler class (untwisted degree-1 class)."""
    B = build_config_space(data.diagram) if B is None else B
    return smith_connecting_homology(B.E, lift_cycle(data, B))


def _projection_rows(E, d):
    """Rows of the twisted projection from integer chains to quotient chains."""
    rows = []
    for r in E.reps(d):
        j, s = E.involution(d, r)
        # t(r) = s j, and t acts by -1 in the quotient, so j maps to -s r
        row = {r: 1}
        row[j] = row.get(j, 0) - s
        rows.append(row)
    return rows


def integral_arrow_formula(data, B=None):
    """An integral arrow formula for v, or None when there is none.

    Solves for an integer 2-cycle c of the blown-up space whose twisted
    projection is z_v; the coefficients of c on the squares C x D are the
    arrow coefficients f(C, D).
    """
    B = build_config_space(data.diagram) if B is None else B
    E = B.E
    z = lift_cycle(data, B)
    n1, n2 = E.count(1), E.count(2)
    cols = [dict(E.boundary_of(2, i)) for i in range(n2)]
    proj = _projection_rows(E, 2)
    for k, row in enumerate(proj):
        for i, a in row.items():
            cols[i][n1 + k] = cols[i].get(n1 + k, 0) + a
    A = IntMatrix(n1 + len(proj), n2, cols)
    x = solve_integer(A, [0] * n1 + list(z.values))
    if x is None:
        return None
    coeffs = {}
    for i, v in enumerate(x):
        lab = E.label(2, i)
        if lab[0] == "sq" and v:
            coeffs[(lab[1], lab[2])] = v
    return ArrowFormula(data.diagram, coeffs)


def half_integer_formula(data):
    """The formula with f(C, D) = v'({C, D}) / 2, stored doubled."""
    coeffs = {}
    for (c, e), v in data.values.items():
        coeffs[(c, e)] = v
        coeffs[(e, c)] = v
    return ArrowFormula(data.diagram, coeffs, 0, True)


def propto(data, B=None):
    """Parity obstruction: z_v capped twice with the Euler class, in Z/2.

    >>> from .diagram import parse_diagram
    >>> from .planarity import manturov_pairs, v_ab_derivative
    >>> d = parse_diagram("1 2 1 2")
    >>> a, b = manturov_pairs(d)[0]
    >>> propto(v_ab_derivative(d, a, b))
    1
    """
    B = build_config_space(data.diagram) if B is None else B
    c1 = arrow_formula_obstruction(data, B)
    c0 = smith_connecting_homology(B.E, c1)
    order = B.E.class_order(c0)
    if order not in (1, 2):
        raise AssertionError(f"twice-capped class has order {order}")
    return 0 if order == 1 else 1
