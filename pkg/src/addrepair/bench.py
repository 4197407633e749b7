"""Failure-injection benchmark: erase each node, repair it, count field operations.

Messages come from :class:`XorShift64Star` so runs are reproducible across
machines and implementations.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from typing import Callable, Iterable, Sequence

from .baselines import build_pyramid, build_tamo_barg
from .construct import build_construction1, build_construction2
from .core import CodeParams, LinearCode, RepairPlan, classify_optimality, encode, repair_symbol, singleton_bound
from .errors import CodingError, CostDrift, InvalidParams, RepairMismatch
from .field import FieldSpec, OpCounter, make_field
from .oracles import DISTANCE_CAP, min_distance, sampled_min_weight

MASK64 = (1 << 64) - 1


class XorShift64Star:
    """xorshift64*: state ^= state >> 12; state ^= state << 25; state ^= state >> 27;
    output = state * 0x2545F4914F6CDD1D mod 2^64.

    A zero seed is replaced by 0x9E3779B97F4A7C15 (the state must be nonzero).
    """

    MULTIPLIER = 0x2545F4914F6CDD1D
    ZERO_SEED = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self.state = (seed & MASK64) or self.ZERO_SEED

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * self.MULTIPLIER) & MASK64

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection of the top 64-bit residue class."""
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            v = self.next()
            if v < limit:
                return v % bound


BUILDERS = {
    "addI": build_construction1,
    "addII": build_construction2,
    "pyramid": build_pyramid,
    "tamo-barg": build_tamo_barg,
}
ADDITION_FAMILIES = ("addI", "addII")


@dataclass(frozen=True)
class NodeStats:
    index: int  # 1-based
    locality: int
    adds: int
    muls: int
    invs: int


@dataclass
class BenchResult:
    family: str
    n: int
    k: int
    r: int
    q: int
    field: str
    nodes: list[NodeStats] = dc_field(default_factory=list)
    distance: int | None = None
    distance_exact: bool = True
    bound: int | None = None
    optimal: str = "unknown"
    error: str | None = None

    @property
    def max_locality(self) -> int:
        return max((s.locality for s in self.nodes), default=0)

    @property
    def totals(self) -> OpCounter:
        out = OpCounter()
        for s in self.nodes:
            out = out + OpCounter(s.adds, s.muls, s.invs)
        return out

    @property
    def total_ops(self) -> int:
        return self.totals.total

    def to_dict(self) -> dict:
        """The fixed JSON schema; a sampled distance shows up with ``optimal == "unknown"``."""
        return {
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "q": self.q,
            "distance": self.distance,
            "bound": self.bound,
            "optimal": self.optimal,
            "nodes": [asdict(s) for s in self.nodes],
            **({"error": self.error} if self.error else {}),
        }


def random_message(rng: XorShift64Star, k: int, q: int) -> list[int]:
    return [rng.below(q) for _ in range(k)]


def inject_and_repair(code: LinearCode, plan: RepairPlan, trials: int, seed: int,
                      repair: Callable | None = None) -> list[NodeStats]:
    """Per-node repair cost over ``trials`` random codewords.

    Each trial erases every node in turn (its entry is replaced by ``None``) and
    repairs it; a wrong symbol raises :class:`RepairMismatch` and a cost that
    changes between trials raises :class:`CostDrift`.
    """
    if trials < 1:
        raise InvalidParams("trials must be >= 1")
    if repair is None:
        def repair(word, i, counter):
            return repair_symbol(code, plan, word, i, counter)
    rng = XorShift64Star(seed)
    costs: list[tuple[int, int, int]] | None = None
    for trial in range(trials):
        word = encode(code, random_message(rng, code.k, code.field.q))
        this = []
        for i in range(code.n):
            erased = list(word)
            erased[i] = None
            counter = OpCounter()
            got = repair(erased, i, counter)
            if got != word[i]:
                raise RepairMismatch(f"trial {trial}: node {i + 1} repaired to {got}, expected {word[i]}")
            this.append(counter.as_tuple())
        if costs is None:
            costs = this
        elif costs != this:
            raise CostDrift(f"repair cost changed in trial {trial}")
    return [NodeStats(i + 1, plan.locality(i), *c) for i, c in enumerate(costs)]


def _parse_params(entry) -> tuple[int, int, int, FieldSpec]:
    if isinstance(entry, str):
        parts = entry.split(",")
        if len(parts) != 4:
            raise InvalidParams(f"parameter set {entry!r} is not 'n,k,r,fieldspec'")
        n, k, r = (int(x) for x in parts[:3])
        return n, k, r, FieldSpec.parse(parts[3])
    n, k, r, spec = entry
    return n, k, r, spec if isinstance(spec, FieldSpec) else FieldSpec.parse(str(spec))


def bench_row(family: str, n: int, k: int, r: int, spec: FieldSpec, seed: int,
              trials: int = 2, cap: int = DISTANCE_CAP, samples: int = 2000) -> BenchResult:
    """Build one family at one parameter point and benchmark it; errors land in ``error``."""
    row = BenchResult(family, n, k, r, spec.q, str(spec))
    try:
        if family not in BUILDERS:
            raise InvalidParams(f"unknown family {family!r}")
        field = make_field(spec)
        params = CodeParams(n, k, r, field.q)
        built = BUILDERS[family](params, field)
        row.nodes = inject_and_repair(built.code, built.plan, trials, seed, built.repair)
        row.bound = singleton_bound(n, k, r)
        if field.q ** k <= cap:
            row.distance = min_distance(built.code, cap).distance
        else:
            row.distance = sampled_min_weight(built.code, samples, XorShift64Star(seed ^ 0x5A5A))
            row.distance_exact = False
        if row.distance_exact:
            row.optimal = classify_optimality(row.distance, n, k, r, built.plan.is_all_symbol(r))
    except CodingError as exc:
        row.error = f"{type(exc).__name__}: {exc}"
        row.nodes = []
    return row


def _row_task(args):
    return bench_row(*args)


def run_comparison(param_sets: Iterable, families: Sequence[str], seed: int, workers: int = 1,
                   trials: int = 2, cap: int = DISTANCE_CAP) -> list[BenchResult]:
    """One :class:`BenchResult` per (family, parameter set), sorted by family then params."""
    tasks = []
    for entry in param_sets:
        n, k, r, spec = _parse_params(entry)
        for fam in families:
            tasks.append((fam, n, k, r, spec, seed, trials, cap))
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row_task, tasks))
    else:
        rows = [_row_task(t) for t in tasks]
    rows.sort(key=lambda b: (b.family, b.n, b.k, b.r, b.q, b.field))
    return rows


def render_table(results: Sequence[BenchResult]) -> str:
    """Plain-text comparison table: one line per family/params row."""
    header = f"{'family':<10} {'n':>3} {'k':>3} {'r':>3} {'q':>6} {'dist':>5} {'bound':>5} " \
             f"{'opt':>7} {'maxloc':>6} {'adds':>6} {'muls':>6} {'invs':>6}"
    lines = [header, "-" * len(header)]
    for b in results:
        if b.error:
            lines.append(f"{b.family:<10} {b.n:>3} {b.k:>3} {b.r:>3} {b.q:>6}  error: {b.error}")
            continue
        tot = b.totals
        dist = str(b.distance) if b.distance_exact else f"<={b.distance}"
        lines.append(
            f"{b.family:<10} {b.n:>3} {b.k:>3} {b.r:>3} {b.q:>6} {dist:>5} {b.bound:>5} "
            f"{b.optimal:>7} {b.max_locality:>6} {tot.adds:>6} {tot.muls:>6} {tot.invs:>6}")
    return "\n".join(lines) + "\n"
