"""The two addition-repair code families and their self-checks.

Construction I (distance at least ``t + 1``, information locality ``r``) builds a
generator matrix: ``m`` diagonal copies of ``(I_r | -1)`` followed by ``t``
coefficient columns chosen so that every row, read as a polynomial, vanishes
at ``1, w, ..., w^(t-1)`` for a primitive ``w``.  The BCH bound then gives
distance at least ``t + 1`` and each row sums to zero over every group.

Construction II (distance ``t + 2``, all-symbol locality ``r``) builds a
parity-check matrix from evaluations of monomials on the cosets of the order
``r + 1`` subgroup of ``F_q^*``: one indicator row per coset plus the
monomials ``x^j``, ``1 <= j < t``, ``(r + 1) !| j``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .core import CodeParams, LinearCode, RepairPlan, repair_symbol
from .errors import (
    BadExponents,
    DivisibilityViolation,
    InvalidParams,
    InvalidShape,
    RankDeficiency,
    SingularMatrix,
    SingularSystem,
    TooManyGroups,
)
from .field import Field, default_field
from .matrix import MatrixGF, null_space, rank, rowspace_equal, solve_linear, vandermonde


def _field_for(params: CodeParams, field: Field | None) -> Field:
    if field is None:
        return default_field(params.q)
    if field.q != params.q:
        raise InvalidParams(f"field has q={field.q}, params say q={params.q}")
    return field


def _poly_eval(field: Field, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


@dataclass(frozen=True)
class ConstructionIResult:
    code: LinearCode
    plan: RepairPlan
    omega: int
    # coefficients[i][j]: the j-th trailing column entry of generator row i
    coefficients: tuple[tuple[int, ...], ...]

    @property
    def final_group_locality(self) -> tuple[int, int]:
        """Locality of the ``t`` trailing parities: (addition plan, coefficient bound).

        The addition plan reads the other ``t - 1`` trailing symbols; a
        coefficient repair through the ``k`` information symbols costs ``k``.
        """
        t = self.code.params.t
        return t - 1, min(t - 1, self.code.k)

    def repair(self, codeword, i, counter=None):
        return repair_symbol(self.code, self.plan, codeword, i, counter)


@dataclass(frozen=True)
class ConstructionIIResult:
    code: LinearCode
    plan: RepairPlan
    omega: int
    alpha: int
    beta: int
    groups: tuple[tuple[int, ...], ...]  # evaluation points S_0 .. S_{m+l-1}

    @property
    def points(self) -> list[int]:
        return [x for g in self.groups for x in g]

    def repair(self, codeword, i, counter=None):
        return repair_symbol(self.code, self.plan, codeword, i, counter)


def solve_parity_coefficients(field: Field, n: int, t: int, omega: int, t1: int, t2: int) -> list[int]:
    """Trailing coefficients ``g`` making ``x^t1 - x^t2 + x^(n-t) g(x)`` vanish
    at ``omega^j`` for ``0 <= j < t``.

    Solves the Vandermonde system on the points ``omega^(n-t+l)`` with
    right-hand side ``omega^(t2 j) - omega^(t1 j)``, then confirms the roots
    by direct evaluation.
    """
    if not (0 <= t1 < t2 <= n - t - 1):
        raise BadExponents(f"need 0 <= t1 < t2 <= n-t-1, got t1={t1} t2={t2} (n={n}, t={t})")
    if t < 1:
        raise BadExponents("need t >= 1 trailing coefficients")
    if not n < field.q:
        raise InvalidParams(f"need n < q, got n={n} q={field.q}")
    f = field
    points = [f.pow(omega, n - t + l) for l in range(t)]
    rhs = [f.sub(f.pow(omega, t2 * j), f.pow(omega, t1 * j)) for j in range(t)]
    try:
        g = solve_linear(vandermonde(f, points, t), rhs)
    except SingularMatrix as exc:
        raise SingularSystem("Vandermonde system singular; omega is not primitive?") from exc
    poly = [0] * n
    poly[t1] = 1
    poly[t2] = f.neg(1)
    poly[n - t:] = g
    if any(_poly_eval(f, poly, f.pow(omega, j)) for j in range(t)):
        raise SingularSystem("solution fails the root condition")
    return g


def build_construction1(params: CodeParams, field: Field | None = None) -> ConstructionIResult:
    """``[n, k, >= t+1]`` code with addition repair and information locality ``r``.

    The Singleton-like bound caps the distance at ``t + 2``; some parameter
    points reach it.
    """
    params.require_construction()
    f = _field_for(params, field)
    n, r, t, m = params.n, params.r, params.t, params.m
    if t < 2:
        raise InvalidParams(
            f"Construction I needs t = n - k - k/r >= 2 (got t={t}); "
            "t <= 1 forces an all-zero parity column")
    omega = f.primitive_element()
    minus_one = f.neg(1)
    rows, coeffs = [], []
    for b in range(m):
        t2 = b * (r + 1) + r
        for a in range(r):
            t1 = b * (r + 1) + a
            g = solve_parity_coefficients(f, n, t, omega, t1, t2)
            row = [0] * n
            row[t1], row[t2] = 1, minus_one
            row[n - t:] = g
            rows.append(row)
            coeffs.append(tuple(g))
    G = MatrixGF.from_rows(f, rows, n)
    code = LinearCode(f, params, G, null_space(G), "addI")
    groups = [range(b * (r + 1), (b + 1) * (r + 1)) for b in range(m)] + [range(n - t, n)]
    return ConstructionIResult(code, RepairPlan.from_groups(n, groups), omega, tuple(coeffs))


def verify_root_condition(result: ConstructionIResult) -> bool:
    """Every generator row, as a polynomial, vanishes at ``omega^j``, ``0 <= j < t``."""
    code = result.code
    return rows_vanish(code.field, code.G, result.omega, code.params.t)


def rows_vanish(field: Field, G: MatrixGF, omega: int, t: int) -> bool:
    points = [field.pow(omega, j) for j in range(t)]
    return all(_poly_eval(field, row, x) == 0 for row in G.to_rows() for x in points)


def eval_point_groups(field: Field, r: int, count: int) -> list[list[int]]:
    """Cosets ``S_i = {w^i a^j : 0 <= j <= r}`` of the order-``(r+1)`` subgroup."""
    q = field.q
    if (q - 1) % (r + 1):
        raise DivisibilityViolation(f"(r+1) must divide (q-1): r+1={r + 1}, q-1={q - 1}")
    available = (q - 1) // (r + 1)
    if count > available:
        raise TooManyGroups(f"only {available} cosets of size {r + 1} exist in F_{q}^*")
    omega = field.primitive_element()
    alpha = field.pow(omega, available)
    return [[field.mul(field.pow(omega, i), field.pow(alpha, j)) for j in range(r + 1)]
            for i in range(count)]


def monomial_row(field: Field, points: Sequence[int], j: int) -> list[int]:
    """Evaluations of ``x^j`` at ``points``."""
    return [field.pow(x, j) for x in points]


def build_construction2(params: CodeParams, field: Field | None = None) -> ConstructionIIResult:
    """``[n, k, t+2]`` code with addition repair and all-symbol locality ``r``."""
    params.require_construction()
    f = _field_for(params, field)
    n, k, r, m, q = params.n, params.k, params.r, params.m, params.q
    if n % (r + 1):
        raise DivisibilityViolation(f"(r+1) must divide n: r+1={r + 1}, n={n}")
    if (q - 1) % (r + 1):
        raise DivisibilityViolation(f"(r+1) must divide (q-1): r+1={r + 1}, q-1={q - 1}")
    ell = params.ell
    if ell == 0:
        warnings.warn("l = 0: the code is a product of single-parity groups (distance 2)",
                      stacklevel=2)
    count = m + ell
    groups = eval_point_groups(f, r, count)
    points = [x for g in groups for x in g]
    rows = [[int(i // (r + 1) == g) for i in range(n)] for g in range(count)]
    rows += [monomial_row(f, points, j) for j in range(1, ell * (r + 1)) if j % (r + 1)]
    H = MatrixGF.from_rows(f, rows, n)
    if rank(H) != n - k:
        raise RankDeficiency(f"parity-check matrix has rank {rank(H)}, expected {n - k}")
    G = null_space(H)
    code = LinearCode(f, params, G, H, "addII")
    plan = RepairPlan.from_groups(n, [range(g * (r + 1), (g + 1) * (r + 1)) for g in range(count)])
    omega = f.primitive_element()
    alpha = f.pow(omega, (q - 1) // (r + 1))
    return ConstructionIIResult(code, plan, omega, alpha, f.pow(omega, r + 1),
                                tuple(tuple(g) for g in groups))


def group_indicators(field: Field, n: int, size: int) -> MatrixGF:
    return MatrixGF.from_rows(
        field, [[int(i // size == g) for i in range(n)] for g in range(n // size)], n)


def verify_lemma_samespace(result: ConstructionIIResult) -> bool:
    """Span of ``x^(j(r+1))`` evaluations equals the span of the group indicators."""
    code = result.code
    f, n, r = code.field, code.n, code.params.r
    count = n // (r + 1)
    powers = MatrixGF.from_rows(
        f, [monomial_row(f, result.points, j * (r + 1)) for j in range(count)], n)
    return rowspace_equal(powers, group_indicators(f, n, r + 1))


def reed_solomon_supercode(result: ConstructionIIResult) -> MatrixGF:
    """Rows ``x^j`` for ``0 <= j <= t``: a Reed-Solomon generator whose dual contains the code."""
    f, t = result.code.field, result.code.params.t
    return MatrixGF.from_rows(f, [monomial_row(f, result.points, j) for j in range(t + 1)])


def verify_rs_containment(result: ConstructionIIResult) -> bool:
    G = result.code.G
    return (G @ reed_solomon_supercode(result).transpose()).is_zero()


def naive_reencode(mds_generator: MatrixGF, r: int, t: int) -> LinearCode:
    """Append a negated-sum column after each group of an ``[k+t-1, k]`` code.

    Groups are ``k/r`` consecutive blocks of ``r`` columns followed by the
    last ``t - 1`` columns (an empty last group adds nothing).  Every group
    then sums to zero, but the distance need not grow.
    """
    f = mds_generator.field
    k, cols = mds_generator.rows, mds_generator.cols
    if r < 1 or k % r or t < 1 or cols != k + t - 1:
        raise InvalidShape(f"expected a [k+t-1, k] generator with r | k; got {k}x{cols}, r={r}, t={t}")
    rows = []
    for row in mds_generator.to_rows():
        out = []
        for start, size in _naive_groups(k, r, t):
            block = row[start:start + size]
            acc = 0
            for e in block:
                acc = f.add(acc, e)
            out += block + [f.neg(acc)]
        rows.append(out)
    G = MatrixGF.from_rows(f, rows)
    return LinearCode.from_generator(G, r=r)


def _naive_groups(k: int, r: int, t: int) -> list[tuple[int, int]]:
    groups = [(b * r, r) for b in range(k // r)]
    if t - 1:
        groups.append((k, t - 1))
    return groups


def naive_reencode_plan(k: int, r: int, t: int) -> RepairPlan:
    """The addition plan of :func:`naive_reencode`'s output."""
    groups, pos = [], 0
    for _, size in _naive_groups(k, r, t):
        groups.append(range(pos, pos + size + 1))
        pos += size + 1
    return RepairPlan.from_groups(pos, groups)
