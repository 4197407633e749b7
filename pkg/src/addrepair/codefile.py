"""Line-oriented text format for codes.

    field p 13                      |  field gf2 8 0x11b
    params n 12 k 6 r 3 family addII
    generator
    <k rows of n space-separated integers>
    groups
    <one line per repair group, 1-based node indices>
    parity                          (optional)
    <n-k rows>

Writing is canonical, so ``write(read(write(c))) == write(c)`` byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FAMILIES, CodeParams, LinearCode, RepairPlan
from .errors import InvalidParams
from .field import FieldSpec, make_field
from .matrix import MatrixGF, null_space


class CodeFileError(InvalidParams):
    pass


@dataclass(frozen=True)
class CodeFile:
    spec: FieldSpec
    params: CodeParams
    family: str
    generator: MatrixGF
    groups: tuple[tuple[int, ...], ...] = ()  # 0-based
    parity: MatrixGF | None = None

    @classmethod
    def from_code(cls, code: LinearCode, plan: RepairPlan | None = None,
                  with_parity: bool = True) -> CodeFile:
        groups = plan.groups if plan is not None else ()
        return cls(code.field.spec, code.params, code.family, code.G, groups,
                   code.H if with_parity else None)

    def to_code(self) -> LinearCode:
        H = self.parity if self.parity is not None else null_space(self.generator)
        return LinearCode(self.generator.field, self.params, self.generator, H, self.family)

    def plan(self) -> RepairPlan | None:
        if not self.groups:
            return None
        return RepairPlan.from_groups(self.params.n, self.groups)

    def dumps(self) -> str:
        s, p = self.spec, self.params
        if s.kind == "prime":
            out = f"field p {s.p}\n"
        else:
            out = f"field gf2 {s.s} {s.poly:#x}\n"
        out += f"params n {p.n} k {p.k} r {p.r} family {self.family}\n"
        out += "generator\n" + self.generator.to_text()
        out += "groups\n" + "".join(" ".join(str(i + 1) for i in g) + "\n" for g in self.groups)
        if self.parity is not None:
            out += "parity\n" + self.parity.to_text()
        return out

    @classmethod
    def loads(cls, text: str) -> CodeFile:
        lines = [ln.rstrip("\n") for ln in text.splitlines()]
        lines = [ln for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
        if len(lines) < 3:
            raise CodeFileError("truncated code file")
        tok = lines[0].split()
        if tok[:2] == ["field", "p"] and len(tok) == 3:
            spec = FieldSpec.prime(int(tok[2]))
        elif tok[:2] == ["field", "gf2"] and len(tok) == 4:
            spec = FieldSpec.gf2(int(tok[2]), int(tok[3], 16))
        else:
            raise CodeFileError(f"bad field line: {lines[0]!r}")
        field = make_field(spec)
        tok = lines[1].split()
        if len(tok) != 9 or tok[0] != "params" or tok[1:9:2] != ["n", "k", "r", "family"]:
            raise CodeFileError(f"bad params line: {lines[1]!r}")
        n, k, r, family = int(tok[2]), int(tok[4]), int(tok[6]), tok[8]
        if family not in FAMILIES:
            raise CodeFileError(f"unknown family {family!r}")
        params = CodeParams(n, k, r, field.q)
        sections: dict[str, list[str]] = {}
        current = None
        for ln in lines[2:]:
            if ln.strip() in ("generator", "groups", "parity"):
                current = ln.strip()
                if current in sections:
                    raise CodeFileError(f"duplicate section {current!r}")
                sections[current] = []
            elif current is None:
                raise CodeFileError(f"data before any section: {ln!r}")
            else:
                sections[current].append(ln)
        if "generator" not in sections:
            raise CodeFileError("missing generator section")
        G = _matrix(field, sections["generator"], k, n, "generator")
        groups = tuple(tuple(int(x) - 1 for x in ln.split()) for ln in sections.get("groups", []))
        if groups:
            RepairPlan.from_groups(n, groups)  # validates the partition
        parity = None
        if "parity" in sections:
            parity = _matrix(field, sections["parity"], n - k, n, "parity")
        return cls(spec, params, family, G, groups, parity)


def _matrix(field, lines, rows, cols, name) -> MatrixGF:
    try:
        data = [[int(x) for x in ln.split()] for ln in lines]
    except ValueError as exc:
        raise CodeFileError(f"non-integer entry in {name} section") from exc
    if len(data) != rows or any(len(r) != cols for r in data):
        raise CodeFileError(f"{name} section must be {rows}x{cols}")
    try:
        return MatrixGF.from_rows(field, data, cols)
    except ValueError as exc:
        raise CodeFileError(f"{name}: {exc}") from exc


def read_code_file(path) -> CodeFile:
    with open(path, encoding="utf-8") as fh:
        return CodeFile.loads(fh.read())


def write_code_file(path, cf: CodeFile) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(cf.dumps())
