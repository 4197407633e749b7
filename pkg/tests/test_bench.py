import json

import numpy as np
import pytest

from addrepair.bench import (
    XorShift64Star,
    bench_row,
    inject_and_repair,
    render_table,
    run_comparison,
)
from addrepair.construct import build_construction1, build_construction2
from addrepair.core import CodeParams, RepairPlan
from addrepair.errors import InvalidParams, RepairMismatch
from addrepair.field import FieldSpec

P13 = FieldSpec.prime(13)


def xorshift_oracle(seed, count):
    """Same generator in wrapping numpy uint64 arithmetic."""
    x = np.uint64(seed or 0x9E3779B97F4A7C15)
    out = []
    with np.errstate(over="ignore"):
        for _ in range(count):
            x ^= x >> np.uint64(12)
            x ^= x << np.uint64(25)
            x ^= x >> np.uint64(27)
            out.append(int(x * np.uint64(0x2545F4914F6CDD1D)))
    return out


@pytest.mark.parametrize("seed", [0, 1, 42, 2**64 - 1])
def test_xorshift_matches_oracle(seed):
    rng = XorShift64Star(seed)
    assert [rng.next() for _ in range(20)] == xorshift_oracle(seed, 20)


def test_below_range_and_zero_seed():
    a, b = XorShift64Star(0), XorShift64Star(0x9E3779B97F4A7C15)
    assert [a.next() for _ in range(5)] == [b.next() for _ in range(5)]
    rng = XorShift64Star(7)
    vals = [rng.below(13) for _ in range(2000)]
    assert set(vals) == set(range(13))


def test_construction2_costs():
    res = build_construction2(CodeParams(12, 6, 3, 13))
    stats = inject_and_repair(res.code, res.plan, 3, seed=9)
    assert [(s.adds, s.muls, s.invs) for s in stats] == [(3, 0, 0)] * 12
    assert [s.index for s in stats] == list(range(1, 13))


def test_construction1_costs():
    res = build_construction1(CodeParams(11, 6, 3, 13))
    stats = inject_and_repair(res.code, res.plan, 2, seed=9)
    assert [(s.adds, s.muls, s.invs) for s in stats[8:]] == [(2, 0, 0)] * 3
    assert [(s.adds, s.muls, s.invs) for s in stats[:8]] == [(3, 0, 0)] * 8


def test_wrong_plan_detected():
    res = build_construction2(CodeParams(12, 6, 3, 13))
    bad = RepairPlan.from_groups(12, [(0, 1, 2, 4), (3, 5, 6, 7), range(8, 12)])
    with pytest.raises(RepairMismatch):
        inject_and_repair(res.code, bad, 2, seed=1)
    with pytest.raises(InvalidParams):
        inject_and_repair(res.code, res.plan, 0, seed=1)


def test_pyramid_global_parity_cost():
    row = bench_row("pyramid", 12, 6, 3, P13, seed=4)
    assert [s.muls for s in row.nodes[8:]] == [6] * 4


def test_three_family_comparison():
    rows = run_comparison([(12, 6, 3, P13)], ["addII", "pyramid", "tamo-barg"], seed=1)
    assert [r.family for r in rows] == ["addII", "pyramid", "tamo-barg"]
    assert [r.distance for r in rows] == [6, 6, 6]
    assert rows[0].totals.muls == 0
    assert all(min(s.muls for s in r.nodes) > 0 for r in rows[1:])
    # Tamo-Barg multiplies more than Pyramid per repair at r = 3
    assert rows[2].totals.muls > rows[1].totals.muls


def test_addI_comparison():
    (row,) = run_comparison(["11,6,3,p:13"], ["addI"], seed=1)
    assert (row.distance, row.bound, row.optimal) == (4, 5, "yes")


def test_empty_families():
    assert run_comparison([(12, 6, 3, P13)], [], seed=1) == []


def test_errors_become_rows():
    row = bench_row("addI", 9, 6, 3, P13, seed=1)
    assert row.error and "t = n - k - k/r >= 2" in row.error
    assert "error" in row.to_dict()
    row = bench_row("nope", 12, 6, 3, P13, seed=1)
    assert row.error.startswith("InvalidParams")


def test_sampled_distance_marks_unknown():
    row = bench_row("addII", 12, 6, 3, P13, seed=1, cap=1000)
    assert not row.distance_exact and row.optimal == "unknown"
    assert row.distance >= 6


def test_json_and_table_render():
    rows = run_comparison([(12, 6, 3, P13)], ["addII"], seed=1)
    d = rows[0].to_dict()
    assert list(d) == ["family", "n", "k", "r", "q", "distance", "bound", "optimal", "nodes"]
    json.dumps(d)
    text = render_table(rows)
    assert text.splitlines()[0].split()[:3] == ["family", "n", "k"]
    assert "addII" in text
