"""Exact rational geometry helpers: linear solves, determinants, segments."""

from fractions import Fraction

__all__ = ["Degenerate", "solve_rational", "det", "moment_point"]


class Degenerate(ValueError):
    """Raised when the input is not in general position."""


def solve_rational(M, b):
    """Solve the square system M x = b over Q; raise Degenerate when singular."""
    n = len(M)
    A = [[Fraction(v) for v in row] + [Fraction(bv)] for row, bv in zip(M, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            raise Degenerate("singular system")
        A[c], A[p] = A[p], A[c]
        pivot = A[c][c]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c] / pivot
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [A[i][n] / A[i][i] for i in range(n)]


def det(M):
    """Exact determinant by elimination over Q."""
    A = [[Fraction(v) for v in row] for row in M]
    n = len(A)
    sign = 1
    out = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            sign = -sign
        out *= A[c][c]
        for r in range(c + 1, n):
            if A[r][c] != 0:
                f = A[r][c] / A[c][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return sign * out


def moment_point(t, dim):
    """The point (t, t^2, ..., t^dim) of the moment curve."""
    t = Fraction(t)
    return tuple(t ** k for k in range(1, dim + 1))
