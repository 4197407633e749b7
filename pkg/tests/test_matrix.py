import pytest
from hypothesis import given, settings, strategies as st

from addrepair.errors import DimensionMismatch, DuplicatePoints, SingularMatrix
from addrepair.field import FieldSpec, make_field
from addrepair.matrix import MatrixGF, null_space, rank, rref_rank, rowspace_equal, solve_linear, vandermonde

F13 = make_field(FieldSpec.prime(13))


@st.composite
def matrices(draw, field=F13, max_dim=8):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    entries = draw(st.lists(st.integers(0, field.q - 1), min_size=rows * cols, max_size=rows * cols))
    return MatrixGF(field, rows, cols, tuple(entries))


def test_rank_basics(ref_h12):
    assert rank(MatrixGF.identity(F13, 2)) == 2
    assert rank(MatrixGF.zeros(F13, 3, 4)) == 0
    assert rank(ref_h12) == 6


def test_rref_leaves_input_unchanged(ref_h12):
    before = ref_h12.entries
    R, rk = rref_rank(ref_h12)
    assert ref_h12.entries == before
    assert rk == 6 and R != ref_h12


def test_solve_identity():
    b = [3, 1, 4]
    assert solve_linear(MatrixGF.identity(F13, 3), b) == b


def test_solve_vandermonde_residual():
    A = vandermonde(F13, [1, 5, 9, 2], 4)
    b = [7, 0, 12, 3]
    x = solve_linear(A, b)
    assert A.apply(x) == b


def test_solve_singular():
    A = MatrixGF.from_rows(F13, [[1, 2], [1, 2]])
    with pytest.raises(SingularMatrix):
        solve_linear(A, [1, 1])
    with pytest.raises(DimensionMismatch):
        solve_linear(MatrixGF.from_rows(F13, [[1, 2, 3]]), [1])


def test_null_space_examples(f2, ref_g12):
    N = null_space(MatrixGF.from_rows(f2, [[1, 1]]))
    assert N.to_rows() == [[1, 1]]
    N = null_space(ref_g12)
    assert N.rows == 6
    assert (ref_g12 @ N.transpose()).is_zero()
    assert null_space(MatrixGF.identity(F13, 4)).rows == 0


def test_rowspace_examples(ref_h12):
    permuted = ref_h12.select_rows([5, 2, 0, 1, 4, 3])
    assert rowspace_equal(ref_h12, permuted)
    scaled = MatrixGF.from_rows(F13, [[F13.mul(7, e) for e in r] for r in ref_h12.to_rows()])
    assert rowspace_equal(ref_h12, scaled)
    assert not rowspace_equal(ref_h12, ref_h12.select_rows([0, 1, 2]))
    with pytest.raises(DimensionMismatch):
        rowspace_equal(ref_h12, MatrixGF.identity(F13, 3))


def test_vandermonde_examples():
    assert vandermonde(F13, [1], 1).to_rows() == [[1]]
    V = vandermonde(F13, [9, 5, 10], 3)  # 2^8, 2^9, 2^10
    assert V.row(0) == [1, 1, 1]
    assert V.row(1) == [9, 5, 10]
    with pytest.raises(DuplicatePoints):
        vandermonde(F13, [3, 3], 2)


def test_text_roundtrip(ref_h12):
    assert MatrixGF.from_text(F13, ref_h12.to_text()) == ref_h12
    assert ref_h12.to_text().splitlines()[3] == "1 8 12 5 2 3 11 10 4 6 9 7"


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_transpose_and_rref(A):
    R, rk = rref_rank(A)
    assert rk == rank(A.transpose())
    assert rank(R) == rk


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_null_space_sound_and_complete(A):
    N = null_space(A)
    for x in N.to_rows():
        assert not any(A.apply(x))
    assert (rank(N) if N.rows else 0) + rank(A) == A.cols


@settings(max_examples=40, deadline=None)
@given(matrices(), st.data())
def test_rowspace_invariant_under_row_ops(A, data):
    assert rowspace_equal(A, A)
    rows = A.to_rows()
    if len(rows) >= 2:
        i, j = data.draw(st.sampled_from([(0, 1), (1, 0)]))
        c = data.draw(st.integers(1, 12))
        rows[i] = [F13.add(a, F13.mul(c, b)) for a, b in zip(rows[i], rows[j])]
    B = MatrixGF.from_rows(F13, rows, A.cols)
    assert rowspace_equal(A, B) and rowspace_equal(B, A)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.data())
def test_solve_roundtrip(n, data):
    pts = data.draw(st.lists(st.integers(1, 12), min_size=n, max_size=n, unique=True))
    b = data.draw(st.lists(st.integers(0, 12), min_size=n, max_size=n))
    A = vandermonde(F13, pts, n)
    assert A.apply(solve_linear(A, b)) == b
