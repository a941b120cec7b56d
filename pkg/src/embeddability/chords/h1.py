"""First homology of the quotient of the blown-up space, near the Mobius bands.

The annuli nu descend to Mobius bands mu in the quotient.  The kernel of
H_1(quotient) -> H_1(quotient, mu) is the image of H_1(mu), i.e. the
cycles supported on mu modulo boundaries of the whole quotient.
"""

from dataclasses import dataclass

from ..equivariant import TWISTED, UNTWISTED, smith_connecting_homology
from ..exactalg import AbelianGroup, IntMatrix, cokernel, integer_kernel
from .config import build_config_space
from .diagram import irreducible_factors


@dataclass
class H1Report:
    h1: AbelianGroup
    kernel: AbelianGroup
    kernel_mod_odd: AbelianGroup
    relative_cap_vanishes: bool

    def to_json(self):
        return {
            "h1": self.h1.to_json(),
            "kernel": self.kernel.to_json(),
            "kernel_mod_odd_torsion": self.kernel_mod_odd.to_json(),
            "relative_cap_vanishes": self.relative_cap_vanishes,
        }


def _rep_positions(E, d, labels):
    pos = {r: k for k, r in enumerate(E.reps(d))}
    return sorted({pos[r] for r in (E.index(d, c) for c in labels) if r in pos})


def mobius_kernel(B):
    """Image of H_1(mu) in H_1 of the untwisted quotient."""
    E = B.E
    q1 = E.quotient_boundary(1, UNTWISTED)
    mu0 = _rep_positions(E, 0, B.nu[0])
    mu1 = _rep_positions(E, 1, B.nu[1])
    sub = IntMatrix.from_rows([[q1[i, j] for j in mu1] for i in mu0], len(mu1))
    cycles = []
    for vec in integer_kernel(sub):
        full = [0] * len(E.reps(1))
        for j, v in zip(mu1, vec):
            full[j] = v
        cycles.append(full)
    if not cycles:
        return AbelianGroup(0, ())
    q2 = E.quotient_boundary(2, UNTWISTED)
    k = len(cycles)
    cols = [{i: v for i, v in enumerate(c) if v} for c in cycles] + list(q2.columns())
    rel = integer_kernel(IntMatrix(len(E.reps(1)), len(cols), cols))
    return cokernel(IntMatrix(k, len(rel), [{i: r[i] for i in range(k) if r[i]} for r in rel]))


def relative_cap_vanishes(B):
    """Whether capping with the Euler class kills twisted H_2 of (quotient, mu)."""
    R = B.E.relative({d: set(c) for d, c in B.nu.items()})
    for vec in integer_kernel(R.quotient_boundary(2, TWISTED)):
        z = R.chain(2, TWISTED, vec)
        if R.class_order(smith_connecting_homology(R, z)) != 1:
            return False
    return True


def h1_structure(d, B=None):
    """H_1 of the quotient and the kernel towards (quotient, mu).

    >>> from .diagram import parse_diagram
    >>> str(h1_structure(parse_diagram("1 1")).kernel_mod_odd)
    'Z'
    """
    B = build_config_space(d) if B is None else B
    h1 = B.E.twisted_homology(1, UNTWISTED)
    ker = mobius_kernel(B)
    return H1Report(h1, ker, ker.without_odd_torsion(), relative_cap_vanishes(B))


def is_irreducible(d):
    return len(irreducible_factors(d)) == 1
