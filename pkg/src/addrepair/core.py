"""Linear codes, repair plans, addition-only repair and the distance bounds.

Node indices are 0-based in this API; the CLI and file formats are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import ceil
from typing import NamedTuple, Sequence

from .errors import (
    DimensionMismatch,
    InvalidParams,
    InvalidPlan,
    LengthMismatch,
    NodeOutOfRange,
    NotACodeword,
)
from .field import Field, OpCounter
from .matrix import MatrixGF, null_space, rank

FAMILIES = ("addI", "addII", "pyramid", "tamo-barg", "raw")


@dataclass(frozen=True)
class CodeParams:
    """Length ``n``, dimension ``k``, locality target ``r``, field size ``q``.

    Only ``1 <= r <= k <= n`` is enforced here, so that arbitrary codes (for
    instance over F_2, or longer than ``q``) can be modelled.  The
    constructions call :meth:`require_construction` for their hypotheses.
    """

    n: int
    k: int
    r: int
    q: int

    def __post_init__(self):
        if not (1 <= self.k <= self.n):
            raise InvalidParams(f"need 1 <= k <= n, got n={self.n} k={self.k}")
        if not (1 <= self.r <= self.k):
            raise InvalidParams(f"need 1 <= r <= k, got r={self.r} k={self.k}")

    @property
    def m(self) -> int:
        """Number of local groups of information symbols, ``ceil(k/r)``."""
        return ceil(self.k / self.r)

    @property
    def t(self) -> int:
        return self.n - self.k - self.m

    @property
    def ell(self) -> int | None:
        if self.n % (self.r + 1):
            return None
        return self.n // (self.r + 1) - self.m

    def require_construction(self) -> None:
        """Check ``n < q``, ``0 < r < k <= n``, ``r | k`` and ``t >= 0``."""
        if not self.n < self.q:
            raise InvalidParams(f"need n < q, got n={self.n} q={self.q}")
        if not self.r < self.k:
            raise InvalidParams(f"need r < k, got r={self.r} k={self.k}")
        if self.k % self.r:
            raise InvalidParams(f"r must divide k, got r={self.r} k={self.k}")
        if self.t < 0:
            raise InvalidParams(f"need t = n - k - k/r >= 0, got t={self.t}")


@dataclass(frozen=True)
class LinearCode:
    """A linear ``[n, k]`` code given by a generator and a parity-check matrix."""

    field: Field
    params: CodeParams
    G: MatrixGF
    H: MatrixGF
    family: str = "raw"

    def __post_init__(self):
        n, k = self.params.n, self.params.k
        if self.family not in FAMILIES:
            raise InvalidParams(f"unknown family {self.family!r}")
        if self.params.q != self.field.q:
            raise InvalidParams("params.q differs from the field size")
        if self.G.shape != (k, n) or self.H.shape != (n - k, n):
            raise DimensionMismatch(
                f"G is {self.G.shape}, H is {self.H.shape} for an [{n},{k}] code")
        if rank(self.G) != k:
            raise InvalidParams("generator matrix is not full rank")
        if rank(self.H) != n - k:
            raise InvalidParams("parity-check matrix is not full rank")
        if not (self.G @ self.H.transpose()).is_zero():
            raise InvalidParams("G H^T != 0")

    @classmethod
    def unchecked(cls, field: Field, params: CodeParams, G: MatrixGF, H: MatrixGF,
                  family: str = "raw") -> LinearCode:
        """Skip the rank/orthogonality checks (for inspecting damaged files)."""
        obj = object.__new__(cls)
        for name, value in (("field", field), ("params", params), ("G", G), ("H", H),
                            ("family", family)):
            object.__setattr__(obj, name, value)
        return obj

    @classmethod
    def from_generator(cls, G: MatrixGF, r: int | None = None, family: str = "raw") -> LinearCode:
        params = CodeParams(G.cols, G.rows, r or G.rows, G.field.q)
        return cls(G.field, params, G, null_space(G), family)

    @classmethod
    def from_parity_check(cls, H: MatrixGF, r: int, family: str = "raw") -> LinearCode:
        G = null_space(H)
        params = CodeParams(H.cols, G.rows, r, H.field.q)
        return cls(H.field, params, G, H, family)

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def k(self) -> int:
        return self.params.k

    def syndrome(self, word: Sequence[int]) -> list[int]:
        return self.H.apply(word)

    def is_codeword(self, word: Sequence[int]) -> bool:
        return len(word) == self.n and not any(self.syndrome(word))


@dataclass(frozen=True)
class RepairPlan:
    """Per-node repair sets.

    ``kind == "addition"``: node ``i`` is recovered as the negated sum of the
    symbols in ``repair_sets[i]``.  ``kind == "coefficient"``: node ``i`` is
    ``sum(multipliers[i][j] * c[repair_sets[i][j]])``.  ``groups`` keeps the
    partition an addition plan was derived from, if any.
    """

    repair_sets: tuple[tuple[int, ...], ...]
    kind: str = "addition"
    multipliers: tuple[tuple[int, ...], ...] | None = None
    groups: tuple[tuple[int, ...], ...] = dc_field(default=())

    def __post_init__(self):
        if self.kind not in ("addition", "coefficient"):
            raise InvalidPlan(f"unknown plan kind {self.kind!r}")
        for i, J in enumerate(self.repair_sets):
            if i in J:
                raise InvalidPlan(f"node {i} appears in its own repair set")
        if self.kind == "coefficient":
            if self.multipliers is None or any(
                    len(c) != len(J) for c, J in zip(self.multipliers, self.repair_sets)):
                raise InvalidPlan("coefficient plans need one multiplier per repair-set node")

    @classmethod
    def from_groups(cls, n: int, groups: Sequence[Sequence[int]]) -> RepairPlan:
        """Addition plan from a partition of ``range(n)``."""
        groups = tuple(tuple(sorted(g)) for g in groups)
        flat = sorted(i for g in groups for i in g)
        if flat != list(range(n)):
            raise InvalidPlan("groups must partition the node set")
        sets = [()] * n
        for g in groups:
            for i in g:
                sets[i] = tuple(j for j in g if j != i)
        return cls(tuple(sets), "addition", None, groups)

    @property
    def n(self) -> int:
        return len(self.repair_sets)

    def locality(self, i: int) -> int:
        return len(self.repair_sets[i])

    def localities(self) -> list[int]:
        return [len(J) for J in self.repair_sets]

    def is_all_symbol(self, r: int) -> bool:
        return max(self.localities(), default=0) <= r


class PlanCheck(NamedTuple):
    """Outcome of :func:`verify_addition_plan`; falsy on failure.

    On failure ``node`` is the first violating node and ``row`` the generator
    row whose entries over ``{node} | J_node`` do not sum to zero.
    """

    ok: bool
    node: int | None = None
    row: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def encode(code: LinearCode, message: Sequence[int]) -> list[int]:
    """The codeword ``message . G``."""
    if len(message) != code.k:
        raise LengthMismatch(f"message has length {len(message)}, expected {code.k}")
    f = code.field
    out = [0] * code.n
    for coef, row in zip(message, code.G.to_rows()):
        if coef:
            out = [f.add(o, f.mul(coef, g)) for o, g in zip(out, row)]
    return out


def singleton_bound(n: int, k: int, r: int) -> int:
    """``n - ceil(k/r) - k + 2``: the distance ceiling for information locality ``r``."""
    if not (0 < r <= k <= n):
        raise InvalidParams(f"need 0 < r <= k <= n, got n={n} k={k} r={r}")
    return n - ceil(k / r) - k + 2


def structure_forbidden(n: int, k: int, r: int) -> bool:
    """True when no all-symbol locality ``r`` code can reach distance ``n-k-k/r+2``.

    Holds exactly when ``0 < r < k``, ``r | k`` and ``(r + 1)`` does not divide ``n``.
    """
    return 0 < r < k and k % r == 0 and n % (r + 1) != 0


def classify_optimality(distance: int, n: int, k: int, r: int, all_symbol: bool | None) -> str:
    """"yes", "no" or "unknown" against the Singleton-like bound.

    ``distance == bound - 1`` still counts as optimal when the bound is
    unattainable for all-symbol locality and the code has all-symbol locality.
    """
    bound = singleton_bound(n, k, r)
    if distance == bound:
        return "yes"
    if distance > bound:
        # the code cannot have information locality r
        return "unknown"
    if distance == bound - 1 and structure_forbidden(n, k, r):
        if all_symbol is None:
            return "unknown"
        return "yes" if all_symbol else "no"
    return "no"


def verify_addition_plan(code: LinearCode, plan: RepairPlan) -> PlanCheck:
    """Check every row of G sums to zero over ``{i} | J_i`` for each node ``i``."""
    if plan.kind != "addition":
        raise InvalidPlan("verify_addition_plan only accepts addition plans")
    if plan.n != code.n:
        raise InvalidPlan(f"plan covers {plan.n} nodes, code has {code.n}")
    f = code.field
    rows = code.G.to_rows()
    for i, J in enumerate(plan.repair_sets):
        support = (i,) + J
        for ri, row in enumerate(rows):
            acc = 0
            for j in support:
                acc = f.add(acc, row[j])
            if acc:
                return PlanCheck(False, i, ri)
    return PlanCheck(True)


def repair_symbol(code: LinearCode, plan: RepairPlan, codeword: Sequence, i: int,
                  counter: OpCounter | None = None, verify: bool = False) -> int:
    """Recover symbol ``i`` from the symbols of its repair set.

    Only positions in ``plan.repair_sets[i]`` are read (unless ``verify`` is
    set), so the erased entry may hold anything, e.g. ``None``.  An addition
    repair over ``rho`` symbols costs exactly ``rho`` additions: ``rho - 1``
    to sum and one negation.
    """
    if not 0 <= i < code.n:
        raise NodeOutOfRange(f"node {i} outside 0..{code.n - 1}")
    if len(codeword) != code.n:
        raise LengthMismatch(f"word has length {len(codeword)}, expected {code.n}")
    if verify and not code.is_codeword(codeword):
        raise NotACodeword("word fails the parity check")
    ops = code.field.counting(counter if counter is not None else OpCounter())
    J = plan.repair_sets[i]
    if plan.kind == "addition":
        if not J:
            return 0
        acc = codeword[J[0]]
        for j in J[1:]:
            acc = ops.add(acc, codeword[j])
        return ops.neg(acc)
    acc = 0
    for coef, j in zip(plan.multipliers[i], J):
        acc = ops.add(acc, ops.mul(coef, codeword[j]))
    return acc
