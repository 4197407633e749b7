"""Pyramid and Tamo-Barg codes: the multiplication-bearing repair baselines.

Repair routines execute every field operation they need and charge it to the
caller's counter; no coefficient (inverse, Lagrange weight) is precomputed.
Sums accumulate from zero, so a sum of ``j`` products costs ``j`` additions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .construct import _field_for, eval_point_groups, monomial_row
from .core import CodeParams, LinearCode, RepairPlan
from .errors import DivisibilityViolation, InvalidParams, MdsSeedFailure, NodeOutOfRange, PointNotInCode
from .field import Field, OpCounter
from .matrix import MatrixGF, null_space, rank


@dataclass(frozen=True)
class PyramidCode:
    """Systematic layout: for each group, ``r`` information nodes then its
    local parity; the ``t`` global parities come last.
    """

    code: LinearCode
    groups: tuple[tuple[int, ...], ...]  # information node positions per group
    local: tuple[tuple[int, ...], ...]  # alpha coefficients per group
    global_: tuple[tuple[int, ...], ...]  # beta coefficients per global parity, over all k info nodes
    plan: RepairPlan

    @property
    def info_positions(self) -> list[int]:
        return [i for g in self.groups for i in g]

    def local_parity_position(self, g: int) -> int:
        return self.groups[g][-1] + 1

    def repair(self, codeword, i, counter=None):
        return pyramid_repair(self, codeword, i, counter)


def _cauchy(field: Field, xs: Sequence[int], ys: Sequence[int]) -> list[list[int]]:
    return [[field.inv(field.sub(x, y)) for y in ys] for x in xs]


def build_pyramid(params: CodeParams, field: Field | None = None) -> PyramidCode:
    """Pyramid code from the systematic ``[k+t+1, k]`` MDS code ``(I | C)``.

    ``C`` is the Cauchy matrix ``1 / (x_j - y_l)`` on the first ``k + t + 1``
    canonical elements; its first column is split across the local groups.
    """
    params.require_construction()
    f = _field_for(params, field)
    n, k, r, m, t = params.n, params.k, params.r, params.m, params.t
    pts = list(range(k + t + 1))
    C = _cauchy(f, pts[:k], pts[k:])
    if any(c == 0 for row in C for c in row):
        raise MdsSeedFailure("zero Cauchy coefficient")
    rows = [[0] * n for _ in range(k)]
    groups, local = [], []
    for b in range(m):
        base = b * (r + 1)
        groups.append(tuple(range(base, base + r)))
        coeffs = []
        for a in range(r):
            j = b * r + a
            rows[j][base + a] = 1
            rows[j][base + r] = C[j][0]
            coeffs.append(C[j][0])
        local.append(tuple(coeffs))
    global_ = []
    for l in range(t):
        for j in range(k):
            rows[j][m * (r + 1) + l] = C[j][l + 1]
        global_.append(tuple(C[j][l + 1] for j in range(k)))
    G = MatrixGF.from_rows(f, rows, n)
    if rank(G) != k:
        raise MdsSeedFailure("generator lost rank")
    code = LinearCode(f, params, G, null_space(G), "pyramid")
    info = [i for g in groups for i in g]
    sets, mults = [], []
    for b, g in enumerate(groups):
        alphas = local[b]
        for a, pos in enumerate(g):
            inv = f.inv(alphas[a])
            sets.append(tuple(p for p in g if p != pos) + (b * (r + 1) + r,))
            mults.append(tuple(f.neg(f.mul(inv, alphas[j])) for j in range(r) if j != a) + (inv,))
        sets.append(g)
        mults.append(tuple(local[b]))
    for l in range(t):
        sets.append(tuple(info))
        mults.append(global_[l])
    plan = RepairPlan(tuple(sets), "coefficient", tuple(mults))
    return PyramidCode(code, tuple(groups), tuple(local), tuple(global_), plan)


def pyramid_repair(code: PyramidCode, codeword: Sequence, i: int, counter: OpCounter | None = None) -> int:
    """Recover node ``i``.

    Information node ``x_l`` of a group: ``alpha_l^{-1} (y - sum_{j != l} alpha_j x_j)``.
    Local parity: ``sum alpha_j x_j``.  Global parity: ``sum beta_j x_j`` over all ``k``.
    """
    lc = code.code
    if not 0 <= i < lc.n:
        raise NodeOutOfRange(f"node {i} outside 0..{lc.n - 1}")
    ops = lc.field.counting(counter if counter is not None else OpCounter())
    r = lc.params.r
    m = len(code.groups)
    if i < m * (r + 1):
        b, a = divmod(i, r + 1)
        positions, alphas = code.groups[b], code.local[b]
        if a == r:
            acc = 0
            for coef, p in zip(alphas, positions):
                acc = ops.add(acc, ops.mul(coef, codeword[p]))
            return acc
        acc = 0
        for j, (coef, p) in enumerate(zip(alphas, positions)):
            if j != a:
                acc = ops.add(acc, ops.mul(coef, codeword[p]))
        diff = ops.sub(codeword[code.local_parity_position(b)], acc)
        return ops.mul(ops.inv(alphas[a]), diff)
    betas = code.global_[i - m * (r + 1)]
    acc = 0
    for coef, p in zip(betas, code.info_positions):
        acc = ops.add(acc, ops.mul(coef, codeword[p]))
    return acc


@dataclass(frozen=True)
class TamoBargCode:
    """Evaluation code of ``span{x^i g(x)^j : i < r, j < k/r}`` with ``g = x^(r+1)``.

    Node ``s (r+1) + a`` stores the evaluation at ``groups[s][a]``.
    """

    code: LinearCode
    groups: tuple[tuple[int, ...], ...]
    exponents: tuple[int, ...]  # generator row e evaluates x^exponents[e]
    plan: RepairPlan

    @property
    def points(self) -> list[int]:
        return [x for g in self.groups for x in g]

    def good_polynomial(self, x: int) -> int:
        f = self.code.field
        return f.pow(x, self.code.params.r + 1)

    def node_of(self, point: int) -> int:
        try:
            return self.points.index(point)
        except ValueError:
            raise PointNotInCode(f"{point} is not an evaluation point") from None

    def repair(self, codeword, i, counter=None):
        return tamo_barg_repair(self, codeword, self.points[i], counter)


def build_tamo_barg(params: CodeParams, field: Field | None = None) -> TamoBargCode:
    """``k = r`` is allowed: the single g-power gives a Reed-Solomon code on all points."""
    f = _field_for(params, field)
    n, k, r, q = params.n, params.k, params.r, params.q
    if k % r:
        raise InvalidParams(f"r must divide k, got r={r} k={k}")
    if params.t < 0:
        raise InvalidParams(f"need t = n - k - k/r >= 0, got t={params.t}")
    if n % (r + 1):
        raise DivisibilityViolation(f"(r+1) must divide n: r+1={r + 1}, n={n}")
    if (q - 1) % (r + 1):
        raise DivisibilityViolation(f"(r+1) must divide (q-1): r+1={r + 1}, q-1={q - 1}")
    if n > q - 1:
        raise InvalidParams(f"need n <= q-1 evaluation points, got n={n}")
    groups = eval_point_groups(f, r, n // (r + 1))
    points = [x for g in groups for x in g]
    exponents = tuple(i + j * (r + 1) for j in range(k // r) for i in range(r))
    G = MatrixGF.from_rows(f, [monomial_row(f, points, e) for e in exponents], n)
    code = LinearCode(f, params, G, null_space(G), "tamo-barg")
    sets, mults = [], []
    for s in range(n // (r + 1)):
        members = range(s * (r + 1), (s + 1) * (r + 1))
        for i in members:
            sets.append(tuple(j for j in members if j != i))
            mults.append(tuple(_lagrange_weights(f, points, i, sets[-1])))
    plan = RepairPlan(tuple(sets), "coefficient", tuple(mults))
    return TamoBargCode(code, tuple(tuple(g) for g in groups), exponents, plan)


def _lagrange_weights(f: Field, points, i, others) -> list[int]:
    a = points[i]
    out = []
    for b in others:
        w = 1
        for c in others:
            if c != b:
                w = f.mul(w, f.div(f.sub(a, points[c]), f.sub(points[b], points[c])))
        out.append(w)
    return out


def tamo_barg_repair(code: TamoBargCode, codeword: Sequence, point: int,
                     counter: OpCounter | None = None) -> int:
    """Lagrange interpolation of the erased evaluation from the other ``r``
    points of its group; every denominator is inverted separately.
    """
    lc = code.code
    i = code.node_of(point)
    ops = lc.field.counting(counter if counter is not None else OpCounter())
    points = code.points
    acc = 0
    for b in code.plan.repair_sets[i]:
        weight = 1
        for c in code.plan.repair_sets[i]:
            if c == b:
                continue
            num = ops.sub(point, points[c])
            den = ops.sub(points[b], points[c])
            weight = ops.mul(weight, ops.mul(num, ops.inv(den)))
        acc = ops.add(acc, ops.mul(codeword[b], weight))
    return acc
