from math import inf, prod

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from embeddability.exactalg import (
    AbelianGroup,
    IntMatrix,
    class_order,
    cokernel,
    elementary_divisors,
    in_span_mod2,
    integer_kernel,
    rank,
    rank_mod2,
    smith_normal_form,
    solve_integer,
)

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def matrices(draw, max_dim=5):
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=m, max_size=m))
    return IntMatrix.from_rows(rows, n)


def _det(rows):
    return Matrix(rows).det() if rows else 1


def _check_decomposition(A):
    snf = smith_normal_form(A)
    assert snf.U @ snf.D @ snf.V == A
    d = [x for x in snf.diagonal if x]
    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert abs(_det(snf.U.to_rows())) == 1
    assert abs(_det(snf.V.to_rows())) == 1
    return snf


def test_snf_two_by_two():
    snf = _check_decomposition(IntMatrix.from_rows([[2, 4], [6, 8]]))
    assert snf.diagonal == [2, 4]


def test_snf_identity_and_zero():
    assert _check_decomposition(IntMatrix.identity(3)).diagonal == [1, 1, 1]
    assert _check_decomposition(IntMatrix.zeros(2, 3)).diagonal == [0, 0]


@given(matrices())
def test_snf_reconstruction(A):
    _check_decomposition(A)


@given(matrices())
def test_elementary_divisors_match_sympy(A):
    ours = [d for d in smith_normal_form(A).diagonal if d]
    theirs = sympy_snf(Matrix(A.to_rows()), domain=ZZ)
    ref = sorted(abs(theirs[i, i]) for i in range(min(theirs.shape)) if theirs[i, i])
    assert sorted(ours) == ref
    assert [d for d in elementary_divisors(A)] == ours
    assert rank(A) == Matrix(A.to_rows()).rank()


def test_big_entries_stay_exact():
    A = IntMatrix.from_rows([[10**30, 1], [1, 10**30 + 1]])
    snf = _check_decomposition(A)
    assert prod(snf.diagonal) == abs(_det(A.to_rows()))


def test_out_of_range_access():
    with pytest.raises(IndexError):
        IntMatrix.identity(2)[2, 0]


def test_solve_integer_examples():
    assert solve_integer(IntMatrix.identity(3), [4, -1, 7]) == [4, -1, 7]
    assert solve_integer(IntMatrix.from_rows([[2]]), [1]) is None
    A = IntMatrix.from_rows([[2, 3]])
    assert A.apply(solve_integer(A, [1])) == [1]


def test_cokernel_examples():
    assert cokernel(IntMatrix.from_rows([[2]])) == AbelianGroup(0, (2,))
    assert cokernel(IntMatrix.from_rows([[2, 0], [0, 3]])) == AbelianGroup(0, (6,))
    assert cokernel(IntMatrix(1, 0)) == AbelianGroup(1, ())


def test_class_order_examples():
    assert class_order(IntMatrix.from_rows([[2]]), [1]) == 2
    assert class_order(IntMatrix.from_rows([[0]]), [1]) == inf
    assert class_order(IntMatrix.identity(1), [5]) == 1


@given(matrices(), st.data())
def test_class_order_one_iff_solvable(A, data):
    b = data.draw(st.lists(small_ints, min_size=A.nrows, max_size=A.nrows))
    assert (class_order(A, b) == 1) == (solve_integer(A, b) is not None)


@given(matrices(), st.data())
def test_class_order_is_minimal_multiple(A, data):
    b = data.draw(st.lists(small_ints, min_size=A.nrows, max_size=A.nrows))
    k = class_order(A, b)
    if k != inf:
        assert solve_integer(A, [k * x for x in b]) is not None
        assert all(solve_integer(A, [j * x for x in b]) is None for j in range(1, k))


@given(matrices(), st.randoms(use_true_random=False))
def test_cokernel_invariant_under_permutation_and_zero_columns(A, rnd):
    rows = A.to_rows()
    rnd.shuffle(rows)
    cols = list(range(A.ncols))
    rnd.shuffle(cols)
    B = IntMatrix.from_rows([[r[j] for j in cols] + [0] for r in rows], A.ncols + 1)
    assert cokernel(A) == cokernel(B)


@given(matrices())
def test_integer_kernel(A):
    K = integer_kernel(A)
    assert len(K) == A.ncols - rank(A)
    for v in K:
        assert not any(A.apply(v))


@given(matrices())
def test_mod2_rank(A):
    ref = Matrix(A.to_rows()).applyfunc(lambda x: x % 2)
    # rank over GF(2) by elimination in sympy's finite field domain
    from sympy.polys.matrices import DomainMatrix
    from sympy import GF
    dm = DomainMatrix.from_Matrix(ref).convert_to(GF(2))
    assert rank_mod2(A) == dm.rank()
    assert in_span_mod2(A, A.dense_column(0))


def test_group_canonical_form():
    assert AbelianGroup.from_invariants(0, [2, 3]) == AbelianGroup.from_invariants(0, [6])
    assert str(AbelianGroup.from_invariants(1, [2, 4])) == "Z + Z/2 + Z/4"
    assert AbelianGroup.from_invariants(0, [3, 4]).without_odd_torsion() == AbelianGroup(0, (4,))
