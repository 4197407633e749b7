"""Command-line front end.

Exit codes: 0 success, 1 verification failed / not a codeword, 2 invalid
parameters or indices, 3 I/O or parse errors.  Reports go to stdout,
diagnostics to stderr.  Node indices are 1-based.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from math import inf

from .bench import BUILDERS, render_table, run_comparison
from .codefile import CodeFile, CodeFileError, read_code_file, write_code_file
from .construct import build_construction2, reed_solomon_supercode, rows_vanish, verify_lemma_samespace
from .core import CodeParams, LinearCode, PlanCheck, RepairPlan, encode, repair_symbol, singleton_bound, verify_addition_plan
from .errors import CodingError, InvalidParams
from .field import FieldSpec, OpCounter, make_field
from .matrix import null_space, rank
from .oracles import DISTANCE_CAP, exact_locality, min_distance

EXIT_OK, EXIT_FAIL, EXIT_PARAMS, EXIT_IO = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(path) -> CodeFile:
    try:
        return read_code_file(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from exc
    except (CodeFileError, ValueError) as exc:
        raise CliError(f"cannot parse {path}: {exc}", EXIT_IO) from exc


def _read_vector(path, field, length: int, what: str) -> list[int]:
    try:
        with open(path, encoding="utf-8") as fh:
            vals = [int(x) for x in fh.read().split()]
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from exc
    except ValueError as exc:
        raise CliError(f"{what} file {path} has a non-integer entry", EXIT_IO) from exc
    if len(vals) != length or not all(field.contains(v) for v in vals):
        raise CliError(f"{what} must hold {length} elements of F_{field.q}", EXIT_IO)
    return vals


def _lenient_code(cf: CodeFile) -> LinearCode:
    H = cf.parity if cf.parity is not None else null_space(cf.generator)
    return LinearCode.unchecked(cf.generator.field, cf.params, cf.generator, H, cf.family)


def cmd_construct(args) -> int:
    field = make_field(FieldSpec.parse(args.field))
    params = CodeParams(args.n, args.k, args.r, field.q)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        built = BUILDERS[args.family](params, field)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    plan = built.plan if built.plan.kind == "addition" else None
    cf = CodeFile.from_code(built.code, plan, with_parity=not args.no_parity)
    try:
        write_code_file(args.out, cf)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}", EXIT_IO) from exc
    print(f"wrote [{params.n},{params.k}] {args.family} code over {field.spec} to {args.out}")
    return EXIT_OK


def _coefficient_family(cf: CodeFile):
    """Rebuild a baseline deterministically and check it matches the file."""
    field = cf.generator.field
    built = BUILDERS[cf.family](cf.params, field)
    if built.code.G != cf.generator:
        raise CliError(f"generator does not match the {cf.family} construction", EXIT_IO)
    return built


def _plan_for(cf: CodeFile) -> RepairPlan | None:
    if cf.family in ("pyramid", "tamo-barg"):
        return _coefficient_family(cf).plan
    return cf.plan()


class _Report:
    def __init__(self):
        self.failed = False

    def check(self, name: str, ok: bool, detail: str = ""):
        self.failed |= not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))

    def skip(self, name: str, why: str):
        print(f"SKIP {name}: {why}")

    def info(self, name: str, detail: str):
        print(f"INFO {name}: {detail}")


def cmd_verify(args) -> int:
    cf = _load(args.code)
    p, G = cf.params, cf.generator
    f = G.field
    rep = _Report()
    rep.check("generator rank", rank(G) == p.k, f"rank {rank(G)}, k = {p.k}")
    if cf.parity is not None:
        H = cf.parity
        rep.check("parity rank", rank(H) == p.n - p.k, f"rank {rank(H)}, n-k = {p.n - p.k}")
        rep.check("orthogonality", (G @ H.transpose()).is_zero(), "G H^T = 0")
    else:
        rep.skip("parity rank", "no parity section")
    code = _lenient_code(cf)
    plan = cf.plan()
    if cf.family in ("addI", "addII", "raw") and plan is not None:
        res: PlanCheck = verify_addition_plan(code, plan)
        if res:
            rep.check("group sums", True, f"{len(plan.groups)} groups sum to zero")
        else:
            rep.check("group sums", False,
                      f"node {res.node + 1} violated by generator row {res.row + 1}")
    elif plan is None:
        rep.skip("group sums", "no groups section")
    else:
        rep.skip("group sums", f"{cf.family} repairs with coefficients")
    if cf.family == "addI":
        omega = f.primitive_element()
        rep.check("root condition", rows_vanish(f, G, omega, p.t),
                  f"rows vanish at w^0..w^{p.t - 1}, w = {omega}")
    else:
        rep.skip("root condition", "not a Construction I code")
    if cf.family == "addII":
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                built = build_construction2(p, f)
        except InvalidParams as exc:
            rep.check("Construction II hypotheses", False, str(exc))
        else:
            rep.check("power span", verify_lemma_samespace(built),
                      "x^(j(r+1)) rows span the group indicators")
            rs = reed_solomon_supercode(built)
            rep.check("RS containment", (G @ rs.transpose()).is_zero(),
                      f"G orthogonal to x^0..x^{p.t}")
    else:
        rep.skip("power span", "not a Construction II code")
    bound = singleton_bound(p.n, p.k, p.r)
    if args.exact_distance:
        try:
            if rank(G) != p.k:
                raise InvalidParams("generator not full rank; distance undefined")
            dr = min_distance(code, args.cap, args.workers, plan)
        except CodingError as exc:
            rep.check("distance bound", False, str(exc))
        else:
            rep.check("distance bound", dr.distance <= bound,
                      f"distance {dr.distance}, bound {bound}, optimal {dr.optimal}")
    else:
        rep.info("bound", f"Singleton-like bound {bound} (use --exact-distance to check)")
    if args.exact_locality:
        try:
            loc = exact_locality(code, workers=args.workers)
        except CodingError as exc:
            rep.check("exact locality", False, str(exc))
        else:
            shown = " ".join("inf" if x == inf else str(x) for x in loc)
            if plan is not None and cf.family in ("addI", "addII", "raw"):
                ok = all(x <= plan.locality(i) for i, x in enumerate(loc))
                rep.check("exact locality", ok, f"per node {shown}")
            else:
                rep.info("exact locality", f"per node {shown}")
    return EXIT_FAIL if rep.failed else EXIT_OK


def cmd_encode(args) -> int:
    cf = _load(args.code)
    f = cf.generator.field
    msg = _read_vector(args.message, f, cf.params.k, "message")
    print(" ".join(str(c) for c in encode(_lenient_code(cf), msg)))
    return EXIT_OK


def cmd_repair(args) -> int:
    cf = _load(args.code)
    code = _lenient_code(cf)
    f, n = code.field, code.n
    word = _read_vector(args.codeword, f, n, "codeword")
    if not 1 <= args.erase <= n:
        raise CliError(f"--erase must be in 1..{n}", EXIT_PARAMS)
    if any(code.syndrome(word)):
        print("error: codeword fails the parity check", file=sys.stderr)
        return EXIT_FAIL
    i = args.erase - 1
    erased = list(word)
    erased[i] = None
    counter = OpCounter()
    if cf.family in ("pyramid", "tamo-barg"):
        value = _coefficient_family(cf).repair(erased, i, counter)
    else:
        plan = cf.plan()
        if plan is None:
            raise CliError("code file has no groups section; no repair plan", EXIT_PARAMS)
        value = repair_symbol(code, plan, erased, i, counter)
    print(value)
    if args.count_ops:
        print(f"adds={counter.adds} muls={counter.muls} invs={counter.invs}")
    return EXIT_OK


def cmd_distance(args) -> int:
    cf = _load(args.code)
    dr = min_distance(cf.to_code(), args.cap, args.workers, _plan_for(cf))
    print(f"distance {dr.distance} bound {dr.bound} optimal {dr.optimal} enumerated {dr.enumerated}")
    return EXIT_OK


def cmd_locality(args) -> int:
    cf = _load(args.code)
    loc = exact_locality(cf.to_code(), args.max_r, workers=args.workers)
    print(" ".join("inf" if x == inf else str(x) for x in loc))
    return EXIT_OK


CSV_FIELDS = ["family", "n", "k", "r", "q", "distance", "bound", "optimal",
              "max_locality", "adds", "muls", "invs", "error"]


def cmd_bench(args) -> int:
    families = [x for x in args.families.split(",") if x]
    for fam in families:
        if fam not in BUILDERS:
            raise CliError(f"unknown family {fam!r}; choose from {', '.join(BUILDERS)}", EXIT_PARAMS)
    param_sets = [x.strip() for x in args.params.split(";") if x.strip()]
    results = run_comparison(param_sets, families, args.seed, args.workers, args.trials, args.cap)
    if args.format == "json":
        out = json.dumps([r.to_dict() for r in results], indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for b in results:
            tot = b.totals
            w.writerow([b.family, b.n, b.k, b.r, b.q,
                        "" if b.distance is None else b.distance,
                        "" if b.bound is None else b.bound, b.optimal,
                        b.max_locality, tot.adds, tot.muls, tot.invs, b.error or ""])
        out = buf.getvalue()
    else:
        out = render_table(results)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc}", EXIT_IO) from exc
    else:
        sys.stdout.write(out)
    for b in results:
        if b.error:
            print(f"{b.family} ({b.n},{b.k},{b.r},q={b.q}): {b.error}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="addrepair", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code and write a code file")
    c.add_argument("--family", required=True, choices=list(BUILDERS))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--field", required=True, help="p:Q or gf2:S[:POLYHEX]")
    c.add_argument("--out", required=True)
    c.add_argument("--no-parity", action="store_true", help="omit the parity section")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a code file's invariants")
    v.add_argument("--code", required=True)
    v.add_argument("--exact-distance", action="store_true")
    v.add_argument("--exact-locality", action="store_true")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--cap", type=int, default=DISTANCE_CAP)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("encode", help="encode a message file")
    e.add_argument("--code", required=True)
    e.add_argument("--message", required=True)
    e.set_defaults(func=cmd_encode)

    r = sub.add_parser("repair", help="repair one erased node of a codeword")
    r.add_argument("--code", required=True)
    r.add_argument("--codeword", required=True)
    r.add_argument("--erase", type=int, required=True, help="1-based node index")
    r.add_argument("--count-ops", action="store_true")
    r.set_defaults(func=cmd_repair)

    d = sub.add_parser("distance", help="exact minimum distance by enumeration")
    d.add_argument("--code", required=True)
    d.add_argument("--workers", type=int, default=1)
    d.add_argument("--cap", type=int, default=DISTANCE_CAP)
    d.set_defaults(func=cmd_distance)

    lo = sub.add_parser("locality", help="exact per-node locality")
    lo.add_argument("--code", required=True)
    lo.add_argument("--max-r", type=int, default=None)
    lo.add_argument("--workers", type=int, default=1)
    lo.set_defaults(func=cmd_locality)

    b = sub.add_parser("bench", help="repair-cost comparison across families")
    b.add_argument("--families", required=True, help="comma-separated, e.g. addII,pyramid,tamo-barg")
    b.add_argument("--params", required=True, help='"n,k,r,fieldspec;..."')
    b.add_argument("--format", choices=["json", "csv", "table"], default="json")
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--trials", type=int, default=2)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--cap", type=int, default=DISTANCE_CAP)
    b.add_argument("--out", default=None)
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except CodingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
