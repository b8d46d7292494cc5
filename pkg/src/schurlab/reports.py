"""Catalog sweeps: run checkers over entries and render deterministic reports.

Entries may be processed concurrently; determinism comes from a post-hoc sort
by group name and check id, never from serialization, so the same input and
flags produce byte-identical reports at any parallelism level.
"""

from __future__ import annotations

import concurrent.futures
import os
from dataclasses import dataclass, field

from . import checks, core
from .catalog import CatalogEntry
from .checks import Verdict
from .errors import BudgetExceeded, SchurlabError

TOOL_VERSION = "schurlab 0.1.0"

CHECK_IDS = ("thmA", "eq1", "lemma31", "thm32", "ps", "hkl", "prop34", "thm36")

_RUNNERS = {
    "thmA": lambda G: checks.thm_a_bound(G),
    "eq1": lambda G: checks.eq1_check(G),
    "lemma31": lambda G: checks.lemma31_check(G),
    "thm32": lambda G: checks.thm32_bound(G),
    "ps": lambda G: checks.podoski_szegedy(G),
    "hkl": lambda G: checks.hkl_check(G),
    "prop34": lambda G: checks.prop34_check(G),
    "thm36": lambda G: checks.thm36_check(G),
}


def resolve_check_set(tokens: list[str] | None) -> list[str]:
    if tokens is not None:
        tokens = [t.strip() for t in tokens if t.strip()]
    if not tokens or "all" in tokens:
        return list(CHECK_IDS)
    bad = [t for t in tokens if t not in CHECK_IDS]
    if bad:
        raise SchurlabError(f"unknown checks {bad}; valid: {', '.join(CHECK_IDS)} or all")
    # report order is fixed regardless of how the user listed them
    return [c for c in CHECK_IDS if c in set(tokens)]


@dataclass
class GroupSection:
    name: str
    invariants: dict = field(default_factory=dict)
    verdicts: list[Verdict] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)
    error: str | None = None


@dataclass
class Report:
    title: str
    sections: list[GroupSection]
    input_errors: int = 0

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "inapplicable": 0, "budget_exceeded": 0}
        for section in self.sections:
            for v in section.verdicts:
                out[v.status] += 1
        return out

    def equality_groups(self) -> list[str]:
        names = []
        for section in self.sections:
            for v in section.verdicts:
                if v.check_id == "eq1" and checks.is_equality_case(v):
                    names.append(section.name)
                    break
        return names

    def findings(self) -> list[str]:
        out = []
        for section in self.sections:
            out.extend(section.findings)
        return out

    @property
    def exit_code(self) -> int:
        if self.input_errors:
            return 2
        return 1 if self.counts()["fail"] else 0

    def render(self) -> str:
        lines = [f"# {TOOL_VERSION} report", f"# {self.title}", ""]
        for section in self.sections:
            lines.append(f"group {section.name}")
            if section.error is not None:
                lines.append(f"  error {section.error}")
                lines.append("")
                continue
            inv = section.invariants
            lines.append(
                "  order={order} center={center} second_center={second_center} "
                "gamma2={gamma2} frattini={frattini} class={cls} mingen={mingen}".format(**inv)
            )
            for v in section.verdicts:
                num = ""
                if v.lhs is not None or v.rhs is not None:
                    num = f" lhs={v.lhs} rhs={v.rhs}"
                lines.append(f"  check {v.check_id} status={v.status}{num}")
                if v.notes:
                    lines.append(f"    notes: {v.notes}")
                if v.witnesses:
                    lines.append("    witnesses: " + ", ".join(v.witnesses))
            for finding in section.findings:
                lines.append(f"  FINDING {finding}")
            lines.append("")
        counts = self.counts()
        lines.append("summary")
        lines.append(
            "  groups={} pass={} fail={} inapplicable={} budget_exceeded={} input_errors={}".format(
                len(self.sections), counts["pass"], counts["fail"],
                counts["inapplicable"], counts["budget_exceeded"], self.input_errors,
            )
        )
        eq = self.equality_groups()
        lines.append("  equality_groups: " + (", ".join(eq) if eq else "none"))
        findings = self.findings()
        if findings:
            lines.append("  findings (require independent verification):")
            for f in findings:
                lines.append(f"    {f}")
        else:
            lines.append("  findings: none")
        lines.append("")
        return "\n".join(lines)


def _invariants_block(G) -> dict:
    cls = core.nilpotency_class(G)
    try:
        mingen = str(core.min_gen_size(G))
    except BudgetExceeded:
        mingen = "?"
    return {
        "order": G.order,
        "center": core.center(G).size,
        "second_center": core.second_center(G).size,
        "gamma2": core.commutator_subgroup(G).subgroup.size,
        "frattini": core.frattini(G).size,
        "cls": cls if cls is not None else "-",
        "mingen": mingen,
    }


def _check_section(entry: CatalogEntry, check_ids: list[str]) -> GroupSection:
    section = GroupSection(name=entry.name)
    if entry.resolved is None:
        section.error = f"{type(entry.error).__name__}: {entry.error}"
        return section
    G = entry.resolved
    section.invariants = _invariants_block(G)
    for cid in check_ids:
        section.verdicts.append(_RUNNERS[cid](G))
    section.verdicts.sort(key=lambda v: v.check_id)
    return section


def _map_sections(entries: list[CatalogEntry], worker, jobs: int | None) -> list[GroupSection]:
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(entries) <= 1:
        sections = [worker(e) for e in entries]
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            sections = list(pool.map(worker, entries))
    sections.sort(key=lambda s: s.name)
    return sections


def run_checks(entries: list[CatalogEntry], check_set: list[str] | None = None,
               jobs: int | None = None) -> Report:
    """One verdict per (group, check); entry errors are isolated per section."""
    ids = resolve_check_set(check_set)
    sections = _map_sections(entries, lambda e: _check_section(e, ids), jobs)
    report = Report(title="verify checks=" + ",".join(ids), sections=sections,
                    input_errors=sum(1 for s in sections if s.error is not None))
    return report


def _equality_section(entry: CatalogEntry) -> GroupSection:
    section = GroupSection(name=entry.name)
    if entry.resolved is None:
        section.error = f"{type(entry.error).__name__}: {entry.error}"
        return section
    G = entry.resolved
    section.invariants = _invariants_block(G)
    eq = checks.eq1_check(G)
    section.verdicts.append(eq)
    if not checks.is_equality_case(eq):
        return section
    cls = core.nilpotency_class(G)
    gamma = core.commutator_subgroup(G).subgroup
    cyclic = core.is_cyclic_subgroup(gamma)
    section.verdicts.append(Verdict(
        check_id="eq1-profile", status="pass",
        notes=f"class={'-' if cls is None else cls}; gamma2_cyclic={'yes' if cyclic else 'no'}",
    ))
    if core._prime_power_base(G.order) is not None and cls == 2:
        section.verdicts.append(checks.thm36_check(G))
    if cls is None:
        section.findings.append(
            f"{entry.name}: NON-NILPOTENT group attains equality (Question 1 candidate); "
            "requires independent verification"
        )
    elif not cyclic:
        section.findings.append(
            f"{entry.name}: nilpotent equality case with NON-CYCLIC commutator subgroup "
            "(Question 2 counterexample candidate); requires independent verification"
        )
    return section


def search_equality(entries: list[CatalogEntry], jobs: int | None = None) -> Report:
    """Sweep for equality cases of the central-quotient bound.

    Potential answers to the open questions are surfaced as FINDINGS and
    never as settled facts.
    """
    sections = _map_sections(entries, _equality_section, jobs)
    return Report(title="search-equality", sections=sections,
                  input_errors=sum(1 for s in sections if s.error is not None))


def analyze(entries: list[CatalogEntry], jobs: int | None = None) -> Report:
    """Invariants only, no theorem checks."""
    def worker(entry: CatalogEntry) -> GroupSection:
        section = GroupSection(name=entry.name)
        if entry.resolved is None:
            section.error = f"{type(entry.error).__name__}: {entry.error}"
            return section
        section.invariants = _invariants_block(entry.resolved)
        return section
    sections = _map_sections(entries, worker, jobs)
    return Report(title="analyze", sections=sections,
                  input_errors=sum(1 for s in sections if s.error is not None))
