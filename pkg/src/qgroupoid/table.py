"""Family-level multiplication tables and the general product rules.

Basis products are grouped by the label families of their factors.  A cell
collapses to a single rule ``i = l + a, j = m + a  =>  c * H_{l+b} ⊗ H_{m+b}``
only when every index instantiation agrees with it; otherwise the cell is
marked irregular and keeps its raw products.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .bialgebra import GradedEndo, QuantumGroupoid, family_name
from .pathspace import ElementaryPath, concat_paths
from .scalar import ONE, Scalar


@dataclass(frozen=True)
class CellRule:
    offset: int          # right factor index = left factor index + offset
    result_family: str
    result_offset: int   # result index = left factor index + result_offset
    coefficient: Scalar = ONE


@dataclass
class TableCell:
    row: str
    col: str
    rule: CellRule | None          # None means the whole cell is zero
    regular: bool = True
    raw: list = field(default_factory=list)


@dataclass
class Table:
    N: int
    families: list
    cells: dict                    # (row family, col family) -> TableCell

    def cell(self, row: str, col: str) -> TableCell:
        return self.cells[(row, col)]

    @property
    def regular(self) -> bool:
        return all(c.regular for c in self.cells.values())


def families(qg: QuantumGroupoid) -> list[str]:
    """Family names in generator order: z first, then one family per generator."""
    return [family_name(qg.N, None)] + [family_name(qg.N, g) for g in qg.graph.generators]


def _family_paths(qg: QuantumGroupoid, fam: str) -> dict[int, ElementaryPath]:
    return {i: qg.path_of_label(fam, i) for i in range(qg.N)}


def multiplication_table(qg: QuantumGroupoid | int) -> Table:
    """Classify all basis products by label family and infer one index rule per cell."""
    if not isinstance(qg, QuantumGroupoid):
        qg = QuantumGroupoid(qg)
    N = qg.N
    fams = families(qg)
    paths = {f: _family_paths(qg, f) for f in fams}
    cells = {}
    for row in fams:
        for col in fams:
            seen = set()
            raw = []
            for l in range(N):
                for m in range(N):
                    a = qg.basis_element(GradedEndo(paths[row][l], paths[row][m]))
                    for i in range(N):
                        for j in range(N):
                            b = qg.basis_element(GradedEndo(paths[col][i], paths[col][j]))
                            prod = qg.multiply(a, b)
                            if not prod:
                                continue
                            raw.append(((l, m, i, j), qg.format(prod)))
                            if len(prod) != 1:
                                seen.add(None)
                                continue
                            (key, c), = prod.items()
                            left, right = qg.label(key.left), qg.label(key.right)
                            if left.family != right.family:
                                seen.add(None)
                                continue
                            di, dj = (i - l) % N, (j - m) % N
                            dl, dr = (left.index - l) % N, (right.index - m) % N
                            if di != dj or dl != dr:
                                seen.add(None)
                                continue
                            seen.add(CellRule(di, left.family, dl, c))
            if not seen:
                cells[(row, col)] = TableCell(row, col, None)
                continue
            rule = next(iter(seen)) if len(seen) == 1 else None
            # a regular cell is nonzero exactly on its offset diagonal: N * N products
            regular = rule is not None and len(raw) == N * N
            cells[(row, col)] = TableCell(row, col, rule, regular, raw if not regular else [])
    return Table(N, fams, cells)


# -- rendering ----------------------------------------------------------

def _latex_family(fam: str) -> str:
    return fam.replace("^(", "^{(").replace(")", ")}") if "^(" in fam else fam


def _shift(var: str, k: int) -> str:
    return var if k == 0 else f"{var}+{k}"


def _delta(var: str, k: int, other: str) -> str:
    # delta_{(l+k)i}, written delta_{li} when k = 0
    return f"\\delta_{{{var}{other}}}" if k == 0 else f"\\delta_{{({var}+{k}){other}}}"


def _sub(fam: str, idx: str) -> str:
    return f"{_latex_family(fam)}_{{{idx}}}" if len(idx) > 1 else f"{_latex_family(fam)}_{idx}"


def cell_latex(cell: TableCell) -> str:
    if cell.rule is None and cell.regular:
        return "0"
    if not cell.regular:
        return "\\text{irregular}"
    r = cell.rule
    coeff = "" if r.coefficient == 1 else f"({r.coefficient})"
    res = f"{_sub(r.result_family, _shift('l', r.result_offset))} \\otimes {_sub(r.result_family, _shift('m', r.result_offset))}"
    return f"{_delta('l', r.offset, 'i')} {_delta('m', r.offset, 'j')} {coeff}({res})"


def header_latex(fam: str, a: str, b: str) -> str:
    return f"{_sub(fam, a)} \\otimes {_sub(fam, b)}"


def to_markdown(table: Table) -> str:
    head = ["$\\cdot$"] + [f"${header_latex(f, 'i', 'j')}$" for f in table.families]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for row in table.families:
        cells = [f"${cell_latex(table.cell(row, col))}$" for col in table.families]
        lines.append(f"| ${header_latex(row, 'l', 'm')}$ | " + " | ".join(cells) + " |")
    lines.append("")
    lines.append(f"Indices are taken mod {table.N}; row factor on the left, column factor on the right.")
    if table.N == 3:
        lines.append("Vertices 0, 1, 2 display as 1, 3, 3̄.")
    return "\n".join(lines) + "\n"


def to_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["row", "col", "result"])
    for row in table.families:
        for col in table.families:
            writer.writerow([header_latex(row, "l", "m"), header_latex(col, "i", "j"),
                             cell_latex(table.cell(row, col))])
    return buf.getvalue()


def to_json(table: Table) -> dict:
    cells = []
    for row in table.families:
        for col in table.families:
            cell = table.cell(row, col)
            entry = {"row_family": row, "col_family": col, "regular": cell.regular, "latex": cell_latex(cell)}
            if cell.rule is not None:
                entry.update({"offset": cell.rule.offset, "result_family": cell.rule.result_family,
                              "result_offset": cell.rule.result_offset,
                              "coefficient": str(cell.rule.coefficient)})
            else:
                entry["zero"] = cell.regular
            if cell.raw:
                entry["raw"] = [{"indices": list(ix), "product": p} for ix, p in cell.raw]
            cells.append(entry)
    return {"N": table.N, "families": table.families, "cells": cells}


def render(table: Table, fmt: str) -> str:
    if fmt == "markdown":
        return to_markdown(table)
    if fmt == "csv":
        return to_csv(table)
    if fmt == "json":
        return json.dumps(to_json(table), indent=2, ensure_ascii=False) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")


# -- general product rules ---------------------------------------------

@dataclass
class RuleReport:
    rule: str
    instances: int
    status: str
    witness: str | None = None

    def to_json(self) -> dict:
        return {"rule": self.rule, "instances": self.instances, "status": self.status, "witness": self.witness}


def general_rules(qg: QuantumGroupoid | int) -> list[RuleReport]:
    """Check the N-independent product rules on every graded basis pair.

    * two halves of triangle-like paths of the same type compose to the outer edge;
    * two halves of two-step loops of the same type compose to the base vertex;
    * multiplying by a vertex is a delta on endpoints;
    * every other graded product vanishes.
    """
    if not isinstance(qg, QuantumGroupoid):
        qg = QuantumGroupoid(qg)
    N = qg.N
    counts = {"triangle": 0, "loop": 0, "vertex": 0, "zero": 0}
    witness: dict = {}

    def seq(path):
        return tuple((v - u) % N for u, v in zip(path, path[1:]))

    for k in qg.basis:
        for l in qg.basis:
            got = qg.multiply(qg.basis_element(k), qg.basis_element(l))
            xi, xi2, rho, rho2 = k.left, k.right, l.left, l.right
            if len(xi) == 1 or len(rho) == 1:
                name = "vertex"
                if len(xi) == 1:
                    ok = xi[0] == rho[0] and xi2[0] == rho2[0]
                    want = qg.basis_element(l) if ok else None
                else:
                    ok = xi[-1] == rho[0] and xi2[-1] == rho2[0]
                    want = qg.basis_element(k) if ok else None
            else:
                left = concat_paths(xi, rho)
                right = concat_paths(xi2, rho2)
                same_type = left is not None and right is not None and seq(left) == seq(right)
                if same_type and left[0] == left[2]:
                    name = "loop"
                    want = qg.basis_element(GradedEndo(ElementaryPath(left[:1]), ElementaryPath(right[:1])))
                elif same_type:
                    name = "triangle"
                    want = qg.basis_element(GradedEndo(ElementaryPath((left[0], left[2])),
                                                       ElementaryPath((right[0], right[2]))))
                else:
                    name, want = "zero", None
            if want is None:
                name = "zero" if name != "vertex" else name
            expected = want if want is not None else type(got).zero()
            counts[name] += 1
            if got != expected and name not in witness:
                witness[name] = f"{qg.endo_label(k)} · {qg.endo_label(l)} = {qg.format(got)}"
    labels = {
        "triangle": "triangle halves of the same type compose to the outer edge",
        "loop": "loop halves of the same type compose to the base vertex",
        "vertex": "multiplication by a vertex is a delta on endpoints",
        "zero": "all other graded products vanish",
    }
    return [RuleReport(labels[n], counts[n], "fail" if n in witness else "pass", witness.get(n))
            for n in ("triangle", "loop", "vertex", "zero")]
