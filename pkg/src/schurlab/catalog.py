"""Catalog files: parsing, emission, and the bundled regression catalog.

The format is line-oriented UTF-8 text:

    # comments and blank lines are ignored
    group <name>
      order <n>          (optional; mismatch is an error)
      gen (1 2 3)(4 5)   (one or more generator lines, cycle notation)
    endgroup

    group <name>
      table <n>          (alternative body: explicit multiplication table)
      <n rows of n integers in 0..n-1; element 0 must be the identity>
    endgroup
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass

import numpy as np

from . import core, families
from .core import GroupTable, Perm
from .errors import (
    DuplicateName,
    ParseError,
    SchurlabError,
    TableAxiomViolation,
)

HEADER = "# schurlab-catalog v1"


@dataclass
class CatalogEntry:
    name: str
    kind: str                      # "gens" or "table"
    resolved: GroupTable | None
    source: str = "<catalog>"
    line_span: tuple[int, int] = (0, 0)
    error: Exception | None = None


def parse_catalog(text: str, source: str = "<catalog>", cap: int | None = None) -> list[CatalogEntry]:
    """Parse and resolve every entry; raises on the first error."""
    entries, errors = parse_catalog_collecting(text, source=source, cap=cap)
    for entry in entries:
        if entry.error is not None:
            raise entry.error
    return entries


def parse_catalog_collecting(text: str, source: str = "<catalog>",
                             cap: int | None = None) -> tuple[list[CatalogEntry], list[Exception]]:
    """Like :func:`parse_catalog` but isolates per-entry resolution errors.

    Structural problems (bad nesting, duplicate names) still raise, since the
    rest of the file cannot be trusted after them.
    """
    if cap is None:
        cap = core.max_order_cap()
    lines = text.splitlines()
    entries: list[CatalogEntry] = []
    errors: list[Exception] = []
    names: set[str] = set()
    i = 0
    total = len(lines)
    while i < total:
        raw = lines[i]
        lineno = i + 1
        stripped = raw.strip()
        i += 1
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split(None, 1)
        if parts[0] != "group":
            raise ParseError(lineno, f"expected 'group <name>', got {stripped!r}")
        if len(parts) < 2 or not parts[1].strip():
            raise ParseError(lineno, "group line is missing a name")
        name = parts[1].strip()
        if name in names:
            raise DuplicateName(f"line {lineno}: duplicate group name {name!r}")
        names.add(name)
        entry, i = _parse_entry(lines, i, lineno, name, source, cap)
        entries.append(entry)
        if entry.error is not None:
            errors.append(entry.error)
    return entries, errors


def _parse_entry(lines: list[str], i: int, start: int, name: str,
                 source: str, cap: int) -> tuple[CatalogEntry, int]:
    gens: list[str] = []
    gen_lines: list[int] = []
    declared_order: int | None = None
    table_rows: list[list[int]] | None = None
    table_n = 0
    kind = ""
    total = len(lines)
    while True:
        if i >= total:
            raise ParseError(start, f"group {name!r} is never closed by 'endgroup'")
        raw = lines[i]
        lineno = i + 1
        stripped = raw.strip()
        i += 1
        if not stripped or stripped.startswith("#"):
            continue
        head = stripped.split(None, 1)[0]
        if head == "endgroup":
            break
        if head == "group":
            raise ParseError(lineno, f"group {name!r} is not closed before the next entry")
        if head == "order":
            try:
                declared_order = int(stripped.split()[1])
            except (IndexError, ValueError):
                raise ParseError(lineno, "order line must read 'order <n>'") from None
        elif head == "gen":
            if kind == "table":
                raise ParseError(lineno, "entry mixes 'gen' and 'table'")
            kind = "gens"
            body = stripped[3:].strip()
            if not body:
                raise ParseError(lineno, "gen line has no cycles")
            gens.append(body)
            gen_lines.append(lineno)
        elif head == "table":
            if kind == "gens":
                raise ParseError(lineno, "entry mixes 'gen' and 'table'")
            if kind == "table":
                raise ParseError(lineno, "entry has two 'table' blocks")
            kind = "table"
            try:
                table_n = int(stripped.split()[1])
            except (IndexError, ValueError):
                raise ParseError(lineno, "table line must read 'table <n>'") from None
            if table_n < 1:
                raise ParseError(lineno, "table size must be positive")
            if table_n > cap:
                raise ParseError(lineno, f"table size {table_n} exceeds cap {cap}")
            table_rows = []
            for r in range(table_n):
                if i >= total:
                    raise ParseError(lineno, f"table of size {table_n} is truncated")
                row_line = lines[i].strip()
                row_no = i + 1
                i += 1
                try:
                    row = [int(tok) for tok in row_line.split()]
                except ValueError:
                    raise ParseError(row_no, "table row contains a non-integer") from None
                if len(row) != table_n:
                    raise ParseError(row_no, f"table row has {len(row)} entries, expected {table_n}")
                table_rows.append(row)
        else:
            raise ParseError(lineno, f"unrecognized directive {head!r} inside group {name!r}")
    span = (start, i)
    if kind == "":
        raise ParseError(start, f"group {name!r} has neither 'gen' lines nor a 'table' block")

    entry = CatalogEntry(name=name, kind=kind, resolved=None, source=source, line_span=span)
    try:
        if kind == "gens":
            entry.resolved = _resolve_gens(gens, gen_lines, cap)
        else:
            entry.resolved = _resolve_table(table_rows, start)
        if declared_order is not None and entry.resolved.order != declared_order:
            raise ParseError(start, f"declared order {declared_order} but resolved order {entry.resolved.order}")
    except SchurlabError as exc:
        entry.error = exc
        entry.resolved = None
    return entry, i


def _resolve_gens(texts: list[str], linenos: list[int], cap: int) -> GroupTable:
    perms = []
    degree = 1
    for text, lineno in zip(texts, linenos):
        try:
            p = Perm.from_cycles(text)
        except SchurlabError as exc:
            raise ParseError(lineno, str(exc)) from exc
        degree = max(degree, p.degree)
        perms.append(p)
    perms = [p.with_degree(degree) for p in perms]
    return core.from_perms(perms, cap=cap)


def _resolve_table(rows: list[list[int]], start: int) -> GroupTable:
    arr = np.array(rows, dtype=np.int64)
    G = GroupTable(arr)
    if G.identity != 0:
        raise TableAxiomViolation("identity", (G.identity,), "element 0 must be the identity")
    return G


# ---------------------------------------------------------------------------
# emission


def entry_text(name: str, G: GroupTable) -> str:
    """A self-contained, re-parseable ``table`` block for one group."""
    lines = [f"group {name}", f"order {G.order}", f"table {G.order}"]
    for row in G.mult:
        lines.append(" ".join(str(int(v)) for v in row))
    lines.append("endgroup")
    return "\n".join(lines) + "\n"


def construct_cmd(spec: families.FamilySpec, out=None) -> str:
    """Build a family member and render it as catalog text (CLI ``construct``)."""
    G = families.build_family(spec)
    name = "_".join([spec.family] + [str(p) for p in spec.params])
    text = HEADER + "\n" + entry_text(name, G)
    if out is not None:
        out.write(text)
    return text


# ---------------------------------------------------------------------------
# the bundled regression catalog


def _abelian_specs_up_to_16() -> list[tuple[str, list[int]]]:
    """All abelian isomorphism types of order <= 16, by invariant factors."""
    out = []
    partitions = {
        1: [[1]], 2: [[2]], 3: [[3]], 4: [[4], [2, 2]], 5: [[5]], 6: [[6]],
        7: [[7]], 8: [[8], [2, 4], [2, 2, 2]], 9: [[9], [3, 3]], 10: [[10]],
        11: [[11]], 12: [[12], [2, 6]], 13: [[13]], 14: [[14]], 15: [[15]],
        16: [[16], [2, 8], [4, 4], [2, 2, 4], [2, 2, 2, 2]],
    }
    for order in sorted(partitions):
        for factors in partitions[order]:
            label = "x".join(f"C{f}" for f in factors)
            out.append((label, factors))
    return out


def regression_groups() -> list[tuple[str, GroupTable]]:
    """Name/group pairs for the bundled regression catalog, built fresh."""
    pairs: list[tuple[str, GroupTable]] = []
    for label, factors in _abelian_specs_up_to_16():
        pairs.append((f"abelian_{label}", families.abelian(factors)))
    pairs.append(("S3", core.from_perms([Perm.from_cycles("(1 2)", 3), Perm.from_cycles("(1 2 3)", 3)])))
    pairs.append(("S4", core.from_perms([Perm.from_cycles("(1 2)", 4), Perm.from_cycles("(1 2 3 4)", 4)])))
    pairs.append(("A4", core.from_perms([Perm.from_cycles("(1 2 3)", 4), Perm.from_cycles("(1 2)(3 4)", 4)])))
    pairs.append(("D8", families.dihedral(8)))
    pairs.append(("Q8", families.quaternion(8)))
    pairs.append(("Q16", families.quaternion(16)))
    for two_n in range(6, 34, 2):
        if two_n == 8:
            continue
        pairs.append((f"D{two_n}", families.dihedral(two_n)))
    for q in (2, 3, 4, 5):
        pairs.append((f"heisenberg_{q}", families.heisenberg(q)))
    pairs.append(("extraspecial_2_1_D", families.extraspecial(2, 1, "D")))
    pairs.append(("extraspecial_2_2_DD", families.extraspecial(2, 2, "DD")))
    pairs.append(("extraspecial_2_2_DQ", families.extraspecial(2, 2, "DQ")))
    pairs.append(("extraspecial_3_1_expp", families.extraspecial(3, 1, "exponent-p")))
    pairs.append(("extraspecial_3_1_expp2", families.extraspecial(3, 1, "exponent-p2")))
    pairs.append(("extraspecial_3_2_expp", families.extraspecial(3, 2, "exponent-p")))
    pairs.append(("y_2_2", families.y_group(2, 2)))
    pairs.append(("y_2_3", families.y_group(2, 3)))
    pairs.append(("C3xD8", families.direct_product(families.cyclic(3), families.dihedral(8))))
    pairs.append(("C2xQ8", families.direct_product(families.cyclic(2), families.quaternion(8))))
    pairs.append(("D8xHeis3", families.direct_product(families.dihedral(8), families.heisenberg(3))))
    pairs.append(("C5xS3", families.direct_product(families.cyclic(5), families.dihedral(6))))
    pairs.append(("Q8cD8", families.central_product([families.quaternion(8), families.dihedral(8)], [2, 2])))
    return pairs


def build_regression_catalog() -> str:
    """Catalog text for the bundled regression suite (deterministic)."""
    blocks = [HEADER, "# bundled regression catalog: small groups exercising every checker", ""]
    for name, G in regression_groups():
        blocks.append(entry_text(name, G))
    return "\n".join(blocks)


def regression_catalog_path():
    """Filesystem path of the bundled regression catalog."""
    return importlib.resources.files("schurlab").joinpath("data/regression.cat")


def load_regression_catalog() -> list[CatalogEntry]:
    text = regression_catalog_path().read_text(encoding="utf-8")
    return parse_catalog(text, source="regression.cat")
