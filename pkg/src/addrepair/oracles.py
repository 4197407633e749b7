"""Brute-force oracles: exact minimum distance and exact per-node locality.

Codewords are enumerated in lexicographic message order.  The message is
split into a *head* (most significant coordinates) and a *tail*; all
``q**len(tail)`` tail codewords are materialised once as a numpy block and each
head value shifts that block.  Contiguous head ranges are the unit of
parallel work, so results do not depend on the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb, inf

import numpy as np

from .core import LinearCode, RepairPlan, classify_optimality, singleton_bound
from .errors import EnumerationTooLarge
from .field import Field, FieldSpec, make_field
from .matrix import MatrixGF, rank

DISTANCE_CAP = 10**8
LOCALITY_CAP = 10**7
# entries per materialised tail block (int64)
BLOCK_ENTRIES = 1 << 22


@dataclass(frozen=True)
class DistanceReport:
    distance: int
    bound: int
    optimal: str
    enumerated: int


def _scaled_rows(field: Field, rows: list[list[int]]) -> list[np.ndarray]:
    """For each generator row, the ``q x n`` table of its scalar multiples."""
    out = []
    for row in rows:
        out.append(np.array([[field.mul(a, g) for g in row] for a in range(field.q)],
                            dtype=np.int64))
    return out


class _Enumerator:
    def __init__(self, spec: FieldSpec, rows: list[list[int]]):
        self.field = make_field(spec)
        self.q = self.field.q
        self.binary = self.field.is_binary
        self.k = len(rows)
        self.n = len(rows[0]) if rows else 0
        self.tables = _scaled_rows(self.field, rows)
        tail = 0
        while tail < self.k and self.q ** (tail + 1) * max(self.n, 1) <= BLOCK_ENTRIES:
            tail += 1
        self.tail_len = max(tail, 1) if self.k else 0
        self.head_len = self.k - self.tail_len
        self._tail = None

    def combine(self, a, b):
        if self.binary:
            return np.bitwise_xor(a, b)
        return (a + b) % self.q

    @property
    def tail_block(self) -> np.ndarray:
        if self._tail is None:
            block = np.zeros((1, self.n), dtype=np.int64)
            # build from the least significant coordinate outwards
            for t in reversed(self.tables[self.head_len:]):
                block = np.concatenate([self.combine(block, t[a]) for a in range(self.q)])
            self._tail = block
        return self._tail

    @property
    def head_count(self) -> int:
        return self.q ** self.head_len

    def head_vector(self, index: int) -> np.ndarray:
        vec = np.zeros(self.n, dtype=np.int64)
        for pos in range(self.head_len - 1, -1, -1):
            index, digit = divmod(index, self.q)
            if digit:
                vec = self.combine(vec, self.tables[pos][digit])
        return vec

    def blocks(self, lo: int, hi: int):
        """Yield ``(head_index, block)`` for head indices in ``[lo, hi)``."""
        tail = self.tail_block
        for h in range(lo, hi):
            yield h, self.combine(tail, self.head_vector(h)) if h else tail


def _min_weight_range(spec: FieldSpec, rows: list[list[int]], lo: int, hi: int) -> int:
    en = _Enumerator(spec, rows)
    best = en.n + 1
    for h, block in en.blocks(lo, hi):
        w = np.count_nonzero(block, axis=1)
        if h == 0:
            w = w[1:]
        if w.size:
            best = min(best, int(w.min()))
        if best <= 1:
            break
    return best


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for p in range(parts):
        hi = lo + step + (p < extra)
        out.append((lo, hi))
        lo = hi
    return out


def _run_ranges(fn, spec, rows, total, workers):
    ranges = _split(total, workers)
    if len(ranges) == 1:
        return [fn(spec, rows, *ranges[0])]
    with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
        futures = [pool.submit(fn, spec, rows, lo, hi) for lo, hi in ranges]
        return [f.result() for f in futures]


def min_weight(field: Field, G: MatrixGF, cap: int = DISTANCE_CAP, workers: int = 1) -> int:
    """Minimum Hamming weight of the nonzero vectors in the row space of ``G``.

    ``G`` must be full rank; each nonzero message is visited exactly once.
    """
    if field.q ** G.rows > cap:
        raise EnumerationTooLarge(f"q^k = {field.q}^{G.rows} exceeds cap {cap}")
    if G.rows == 0:
        return 0
    rows = G.to_rows()
    en = _Enumerator(field.spec, rows)
    return min(_run_ranges(_min_weight_range, field.spec, rows, en.head_count, workers))


def min_distance(code: LinearCode, cap: int = DISTANCE_CAP, workers: int = 1,
                 plan: RepairPlan | None = None) -> DistanceReport:
    """Exact minimum distance by exhaustive enumeration of all ``q^k - 1`` codewords.

    ``plan`` (when given) decides whether the code counts as all-symbol
    locality ``r`` for the optimality flag.
    """
    p = code.params
    d = min_weight(code.field, code.G, cap, workers)
    all_symbol = plan.is_all_symbol(p.r) if plan is not None else None
    bound = singleton_bound(p.n, p.k, p.r)
    return DistanceReport(d, bound, classify_optimality(d, p.n, p.k, p.r, all_symbol),
                          code.field.q ** p.k - 1)


def sampled_min_weight(code: LinearCode, samples: int, rng) -> int:
    """Smallest weight among ``samples`` random nonzero codewords.

    An upper bound on the distance; ``rng`` needs a ``below(q)`` method.
    """
    from .core import encode

    best = code.n
    q = code.field.q
    for _ in range(samples):
        msg = [rng.below(q) for _ in range(code.k)]
        if not any(msg):
            continue
        best = min(best, sum(1 for c in encode(code, msg) if c))
    return best


def _locality_range(spec: FieldSpec, rows: list[list[int]], lo: int, hi: int) -> list[int]:
    en = _Enumerator(spec, rows)
    big = en.n + 1
    best = np.full(en.n, big, dtype=np.int64)
    for h, block in en.blocks(lo, hi):
        nz = block != 0
        w = nz.sum(axis=1)
        if h == 0:
            nz, w = nz[1:], w[1:]
        if w.size:
            best = np.minimum(best, np.where(nz, w[:, None], big).min(axis=0))
    return best.tolist()


def _locality_by_supports(code: LinearCode, max_r: int) -> list:
    """Smallest ``J`` (by size) with column ``i`` of G in the span of columns ``J``."""
    G = code.G
    out = []
    for i in range(code.n):
        others = [j for j in range(code.n) if j != i]
        found = inf
        for size in range(0, max_r + 1):
            for J in combinations(others, size):
                base = rank(G.select_columns(J)) if J else 0
                if rank(G.select_columns(J + (i,))) == base:
                    found = size
                    break
            if found != inf:
                break
        out.append(found)
    return out


def exact_locality(code: LinearCode, max_r: int | None = None, cap: int = LOCALITY_CAP,
                   workers: int = 1) -> list:
    """Per-node locality: the least ``rho`` such that some dual codeword of
    weight ``rho + 1`` has node ``i`` in its support.

    Entries above ``max_r`` (default ``n - 1``) are reported as ``math.inf``.
    Enumerates the dual code when ``q^(n-k) <= cap``; otherwise searches
    candidate repair sets of size up to ``max_r`` by rank tests, which is
    only tractable when ``max_r`` is small.
    """
    n, k, q = code.n, code.k, code.field.q
    if max_r is None:
        max_r = n - 1
    if n == k:
        return [inf] * n
    if q ** (n - k) <= cap:
        rows = code.H.to_rows()
        en = _Enumerator(code.field.spec, rows)
        parts = _run_ranges(_locality_range, code.field.spec, rows, en.head_count, workers)
        weights = np.min(np.array(parts), axis=0)
        return [int(w) - 1 if w <= n and w - 1 <= max_r else inf for w in weights]
    max_r = min(max_r, n - 1)
    candidates = n * sum(comb(n - 1, s) for s in range(max_r + 1))
    if candidates > cap:
        raise EnumerationTooLarge(
            f"q^(n-k) = {q}^{n - k} and {candidates} candidate repair sets both exceed cap {cap}")
    return _locality_by_supports(code, max_r)
