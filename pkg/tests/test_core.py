import pytest
from hypothesis import given, settings, strategies as st

from addrepair.core import (
    CodeParams,
    LinearCode,
    RepairPlan,
    classify_optimality,
    encode,
    repair_symbol,
    singleton_bound,
    structure_forbidden,
    verify_addition_plan,
)
from addrepair.errors import (
    DimensionMismatch,
    InvalidParams,
    InvalidPlan,
    LengthMismatch,
    NodeOutOfRange,
    NotACodeword,
)
from addrepair.field import OpCounter
from addrepair.matrix import MatrixGF

G12_GROUPS = [range(0, 4), range(4, 8), range(8, 12)]


@pytest.fixture(scope="module")
def g12(ref_g12):
    return LinearCode.from_generator(ref_g12, r=3)


def test_params_validation():
    p = CodeParams(12, 6, 3, 13)
    assert (p.m, p.t, p.ell) == (2, 4, 1)
    assert CodeParams(11, 6, 3, 13).ell is None
    with pytest.raises(InvalidParams):
        CodeParams(5, 6, 3, 13)
    with pytest.raises(InvalidParams):
        CodeParams(12, 6, 7, 13)
    with pytest.raises(InvalidParams):
        CodeParams(13, 6, 3, 13).require_construction()
    with pytest.raises(InvalidParams):
        CodeParams(12, 6, 4, 13).require_construction()


def test_linear_code_rejects_bad_shapes(f13, ref_g12, ref_h12):
    p = CodeParams(12, 6, 3, 13)
    LinearCode(f13, p, ref_g12, ref_h12)
    with pytest.raises(DimensionMismatch):
        LinearCode(f13, p, ref_g12, ref_h12.select_rows([0, 1]))
    dup = MatrixGF.from_rows(f13, [ref_h12.row(1)] + ref_h12.to_rows()[1:])
    with pytest.raises(InvalidParams):
        LinearCode(f13, p, ref_g12, dup)
    # the all-ones word lies in the dual (each generator row sums to 0 mod 13); e_1 does not
    bad = MatrixGF.from_rows(f13, [[1] + [0] * 11] + ref_h12.to_rows()[1:])
    with pytest.raises(InvalidParams):
        LinearCode(f13, p, ref_g12, bad)


def test_encode(g12, ref_g12):
    assert encode(g12, [0] * 6) == [0] * 12
    assert encode(g12, [1, 0, 0, 0, 0, 0]) == ref_g12.row(0)
    with pytest.raises(LengthMismatch):
        encode(g12, [1, 2])


def test_reference_parity_check_orthogonal(g12, ref_h12):
    # the reference parity-check matrix is orthogonal to the reference generator
    assert (g12.G @ ref_h12.transpose()).is_zero()


def test_singleton_bound():
    assert singleton_bound(12, 6, 3) == 6
    assert singleton_bound(11, 6, 3) == 5
    for n, k in [(7, 4), (10, 3), (5, 5)]:
        assert singleton_bound(n, k, k) == n - k + 1


def test_structure_forbidden():
    assert structure_forbidden(11, 6, 3)
    assert not structure_forbidden(12, 6, 3)
    assert structure_forbidden(10, 4, 2)
    assert not structure_forbidden(10, 4, 4)


def test_classify_optimality():
    assert classify_optimality(6, 12, 6, 3, True) == "yes"
    assert classify_optimality(4, 11, 6, 3, True) == "yes"
    assert classify_optimality(4, 11, 6, 3, False) == "no"
    assert classify_optimality(4, 11, 6, 3, None) == "unknown"
    assert classify_optimality(5, 12, 6, 3, True) == "no"


def test_verify_addition_plan(g12, f2):
    assert verify_addition_plan(g12, RepairPlan.from_groups(12, G12_GROUPS))
    bad = RepairPlan.from_groups(12, [(0, 1, 2, 4), (3, 5, 6, 7), range(8, 12)])
    res = verify_addition_plan(g12, bad)
    assert not res
    assert (res.node, res.row) == (0, 0)  # row 1 over {1,2,3,5} sums to 1
    rep = LinearCode.from_generator(MatrixGF.from_rows(f2, [[1, 1]]))
    assert verify_addition_plan(rep, RepairPlan.from_groups(2, [(0, 1)]))


def test_plan_validation():
    with pytest.raises(InvalidPlan):
        RepairPlan.from_groups(4, [(0, 1), (1, 2, 3)])
    with pytest.raises(InvalidPlan):
        RepairPlan(((0,),))
    with pytest.raises(InvalidPlan):
        RepairPlan(((1,), (0,)), "coefficient", None)


def test_reference_code_repair_node9(g12):
    word = encode(g12, [8, 2, 5, 0, 0, 0])
    plan = RepairPlan.from_groups(12, G12_GROUPS)
    erased = list(word)
    erased[8] = None
    c = OpCounter()
    got = repair_symbol(g12, plan, erased, 8, c)
    assert got == (-(word[9] + word[10] + word[11])) % 13 == word[8]
    assert c.as_tuple() == (3, 0, 0)
    assert repair_symbol(g12, plan, [0] * 12, 5) == 0


def test_repair_errors(g12):
    plan = RepairPlan.from_groups(12, G12_GROUPS)
    word = encode(g12, [1, 2, 3, 4, 5, 6])
    with pytest.raises(NodeOutOfRange):
        repair_symbol(g12, plan, word, 12)
    with pytest.raises(LengthMismatch):
        repair_symbol(g12, plan, word[:5], 0)
    word[0] = (word[0] + 1) % 13
    with pytest.raises(NotACodeword):
        repair_symbol(g12, plan, word, 3, verify=True)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 12), min_size=6, max_size=6), st.integers(0, 11))
def test_repair_roundtrip_and_cost(g12, msg, i):
    plan = RepairPlan.from_groups(12, G12_GROUPS)
    word = encode(g12, msg)
    assert g12.is_codeword(word)
    erased = list(word)
    erased[i] = None
    c = OpCounter()
    assert repair_symbol(g12, plan, erased, i, c) == word[i]
    assert c.as_tuple() == (plan.locality(i), 0, 0)


@given(st.integers(1, 40), st.integers(1, 40), st.integers(1, 40))
def test_bound_at_most_classical_singleton(n, k, r):
    if r <= k <= n:
        assert singleton_bound(n, k, r) <= n - k + 1
        assert (singleton_bound(n, k, r) == n - k + 1) == (r == k)
