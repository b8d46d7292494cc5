"""One checker per quantitative statement about central quotients and
commutator subgroups, each producing a structured :class:`Verdict`.

Checkers are total on valid tables: failed hypotheses yield status
``inapplicable``, search-budget exhaustion yields ``budget_exceeded``, and a
``fail`` always exhibits concrete witnesses.  All quantities are exact
integers; the only transcendental bound (``n^(2 log2 n)``) is evaluated with
guard digits and rounded up, which keeps ``pass`` sound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from . import core, families, isoclinism
from .core import GroupTable, SubgroupMask
from .errors import BudgetExceeded, NotGenerating, SchurlabError

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"
BUDGET_EXCEEDED = "budget_exceeded"

DEFAULT_ISOCLINISM_BUDGET = 10_000_000


@dataclass(frozen=True)
class Verdict:
    """Outcome of one checker on one group."""

    check_id: str
    status: str
    lhs: int | None = None
    rhs: int | None = None
    witnesses: tuple[str, ...] = ()
    notes: str = ""

    def __post_init__(self):
        if self.status == FAIL and not self.witnesses:
            raise SchurlabError("a failing verdict must exhibit witnesses")


def ceil_power_bound(n: int) -> int:
    """ceil(n^(2 log2 n)) as an exact integer; exact when n is a power of 2."""
    if n < 1:
        raise SchurlabError("bound argument must be positive")
    if n == 1:
        return 1
    k = n.bit_length() - 1
    if n == 1 << k:
        return 1 << (2 * k * k)
    digits = int(2 * math.log2(n) * math.log10(n)) + 35
    with mpmath.workdps(digits):
        value = mpmath.mpf(n) ** (2 * mpmath.log(n, 2))
        return int(mpmath.ceil(value))


def _labels(G: GroupTable, elems) -> tuple[str, ...]:
    return tuple(G.label(int(x)) for x in elems)


def _default_lifts(G: GroupTable, budget: int | None = None) -> list[int]:
    """Lift a minimal generating set of G/Z(G) to smallest coset representatives."""
    q = core.quotient(G, core.center(G))
    gens = core.min_generating_set(q.quotient, budget)
    return [int(q.reps[g]) for g in gens]


def thm_a_bound(G: GroupTable, lift_choice: list[int] | None = None) -> Verdict:
    """|G/Z(G)| <= product of the conjugacy class sizes of quotient generators,
    plus the proof mechanism Z(G) = intersection of their centralizers."""
    check_id = "thmA"
    z = core.center(G)
    q = core.quotient(G, z)
    try:
        if lift_choice is None:
            lifts = _default_lifts(G)
        else:
            lifts = [int(x) for x in lift_choice]
            cosets = sorted({int(q.project[x]) for x in lifts})
            span = core.closure(q.quotient, cosets)
            if span.size != q.quotient.order:
                raise NotGenerating(f"cosets of {lifts} generate only {span.size} of {q.quotient.order} cosets")
    except BudgetExceeded as exc:
        return Verdict(check_id, BUDGET_EXCEEDED, notes=str(exc))
    lhs = q.quotient.order
    rhs = 1
    for x in lifts:
        rhs *= core.class_of(G, x).size
    inter = np.ones(G.order, dtype=bool)
    for x in lifts:
        inter &= core.centralizer(G, x).members
    mechanism_ok = np.array_equal(inter, z.members)
    status = PASS if (lhs <= rhs and mechanism_ok) else FAIL
    notes = f"t={len(lifts)}"
    if not mechanism_ok:
        notes += "; centralizer intersection differs from the center"
    witnesses = _labels(G, lifts) if (lifts or status == FAIL) else ()
    if status == FAIL and not witnesses:
        witnesses = ("<no lifts>",)
    return Verdict(check_id, status, lhs=lhs, rhs=rhs, witnesses=witnesses, notes=notes)


def eq1_check(G: GroupTable, budget: int | None = None) -> Verdict:
    """|G/Z(G)| <= |gamma_2(G)|^d with d the minimal generating number of G/Z(G)."""
    check_id = "eq1"
    z = core.center(G)
    q = core.quotient(G, z)
    gamma = core.commutator_subgroup(G).subgroup
    try:
        gens = core.min_generating_set(q.quotient, budget)
    except BudgetExceeded as exc:
        return Verdict(check_id, BUDGET_EXCEEDED, notes=str(exc))
    d = len(gens)
    lhs = q.quotient.order
    rhs = gamma.size ** d
    status = PASS if lhs <= rhs else FAIL
    equality = "equality" if lhs == rhs else "strict"
    lifts = [int(q.reps[g]) for g in gens]
    return Verdict(
        check_id,
        status,
        lhs=lhs,
        rhs=rhs,
        witnesses=_labels(G, lifts) if lifts or status == FAIL else (),
        notes=f"{equality}; d={d}; |gamma2|={gamma.size}",
    )


def is_equality_case(verdict: Verdict) -> bool:
    return verdict.status == PASS and verdict.lhs == verdict.rhs


def _central_basis(G: GroupTable) -> tuple[list[int], list[int]]:
    """Invariant-factor basis of Z_2(G)/Z(G), lifted to elements of G.

    Returns (lifted elements, their invariant-factor orders)."""
    z = core.center(G)
    z2 = core.second_center(G)
    sub = core.subgroup_table(G, z2)
    local_center = np.flatnonzero(z.members[sub.to_parent])
    zmask = np.zeros(sub.table.order, dtype=bool)
    zmask[local_center] = True
    kernel = SubgroupMask(sub.table, zmask, verify=False)
    q = core.quotient(sub.table, kernel)
    factors, basis = core.abelian_invariants(q.quotient)
    lifted = [int(sub.to_parent[q.reps[b]]) for b in basis]
    return lifted, [int(d) for d in factors]


def lemma31_check(G: GroupTable) -> Verdict:
    """|Z_2(G)/Z(G)| equals the product of exp([x_i, G]) over an invariant-factor
    basis, and each basis coset's order equals exp([x_i, G])."""
    check_id = "lemma31"
    z = core.center(G)
    z2 = core.second_center(G)
    lifted, factors = _central_basis(G)
    lhs = z2.size // z.size
    rhs = 1
    step_ok = True
    exps = []
    for x, d in zip(lifted, factors):
        cset = core.commutator_set(G, x)
        if not z.members[cset].all():
            return Verdict(check_id, FAIL, lhs=lhs, rhs=None,
                           witnesses=(G.label(x),),
                           notes="[x, G] not central for a second-center element")
        # central commutator sets close into subgroups; the exponent below is
        # the exponent of that subgroup
        prods = G.mult[np.ix_(cset, cset)]
        if not np.isin(prods, cset).all():
            return Verdict(check_id, FAIL, lhs=lhs, rhs=None,
                           witnesses=(G.label(x),),
                           notes="[x, G] failed to be a subgroup despite central values")
        e = int(math.lcm(*[int(o) for o in core.element_orders(G)[cset]]))
        exps.append(e)
        rhs *= e
        if e != d:  # the proof's step: order of xZ(G) in Z2/Z equals exp([x,G])
            step_ok = False
    status = PASS if (rhs == lhs and step_ok) else FAIL
    notes = f"basis orders {factors}; exponents {exps}"
    if not step_ok:
        notes += "; coset order != exp([x,G])"
    return Verdict(check_id, status, lhs=lhs, rhs=rhs,
                   witnesses=_labels(G, lifted) if lifted or status == FAIL else (),
                   notes=notes)


def thm32_bound(G: GroupTable) -> Verdict:
    """|G/Z(G)| <= n^(2 log2 n) * prod exp([x_i, G]) with n = |gamma_2 Z / Z|."""
    check_id = "thm32"
    z = core.center(G)
    gamma = core.commutator_subgroup(G).subgroup
    prod_mask = np.zeros(G.order, dtype=bool)
    gidx = gamma.indices()
    for zi in z.indices():
        prod_mask[G.mult[gidx, zi]] = True
    n = int(prod_mask.sum()) // z.size
    lifted, _factors = _central_basis(G)
    tail = 1
    for x in lifted:
        cset = core.commutator_set(G, x)
        tail *= int(math.lcm(*[int(o) for o in core.element_orders(G)[cset]]))
    rhs = ceil_power_bound(n) * tail
    lhs = G.order // z.size
    status = PASS if lhs <= rhs else FAIL
    return Verdict(check_id, status, lhs=lhs, rhs=rhs,
                   witnesses=_labels(G, lifted) if (lifted or status == FAIL) else (),
                   notes=f"n={n}; exponent product {tail}")


def podoski_szegedy(G: GroupTable) -> Verdict:
    """|G/Z_2(G)| <= ceil(n^(2 log2 n)) with n = |gamma_2/(gamma_2 n Z)|."""
    check_id = "ps"
    z = core.center(G)
    z2 = core.second_center(G)
    gamma = core.commutator_subgroup(G).subgroup
    meet = int((gamma.members & z.members).sum())
    n = gamma.size // meet
    lhs = G.order // z2.size
    rhs = ceil_power_bound(n)
    status = PASS if lhs <= rhs else FAIL
    witnesses = () if status == PASS else (f"n={n}",)
    return Verdict(check_id, status, lhs=lhs, rhs=rhs, witnesses=witnesses, notes=f"n={n}")


def hkl_check(G: GroupTable) -> Verdict:
    """Strict bound |G/Z(G)| < |gamma_2(G)|^2 for non-abelian Frattini-trivial groups."""
    check_id = "hkl"
    if core.is_abelian(G):
        return Verdict(check_id, INAPPLICABLE, notes="abelian")
    phi = core.frattini(G)
    if phi.size != 1:
        return Verdict(check_id, INAPPLICABLE, notes=f"Frattini subgroup has order {phi.size}")
    z = core.center(G)
    gamma = core.commutator_subgroup(G).subgroup
    lhs = G.order // z.size
    rhs = gamma.size ** 2
    status = PASS if lhs < rhs else FAIL
    witnesses = () if status == PASS else (f"|G/Z|={lhs}", f"|gamma2|^2={rhs}")
    return Verdict(check_id, status, lhs=lhs, rhs=rhs, notes="strict inequality", witnesses=witnesses)


def _class2_equality_gate(G: GroupTable, budget: int | None = None):
    """Common hypothesis block: p-group of class 2 with equality; returns
    (inapplicability reason | None, eq1 verdict | None, prime)."""
    p = core._prime_power_base(G.order)
    if p is None:
        return "not a p-group", None, None
    if core.nilpotency_class(G) != 2:
        return "nilpotency class is not 2", None, None
    eq = eq1_check(G, budget)
    if eq.status == BUDGET_EXCEEDED:
        return None, eq, p
    if not is_equality_case(eq):
        return "no equality in the central-quotient bound", eq, p
    return None, eq, p


def prop34_check(H: GroupTable, budget: int | None = None) -> Verdict:
    """Four structural properties of class-2 p-groups with Z = gamma_2 and equality:
    cyclic gamma_2, homocyclic H/Z, [x,H] = gamma_2 off the Frattini subgroup,
    and an even minimal generating number."""
    check_id = "prop34"
    reason, eq, _p = _class2_equality_gate(H, budget)
    if eq is not None and eq.status == BUDGET_EXCEEDED:
        return Verdict(check_id, BUDGET_EXCEEDED, notes=eq.notes)
    if reason is not None:
        return Verdict(check_id, INAPPLICABLE, notes=reason)
    z = core.center(H)
    gamma = core.commutator_subgroup(H).subgroup
    if not z.same_as(gamma):
        return Verdict(check_id, INAPPLICABLE, notes="center differs from the commutator subgroup")

    sub_checks: list[tuple[str, bool]] = []
    witnesses: list[str] = []

    cyclic_ok = core.is_cyclic_subgroup(gamma)
    sub_checks.append(("i:cyclic", cyclic_ok))

    quot = core.quotient(H, z).quotient
    homo_ok = core.is_homocyclic(quot)
    factors = core.abelian_invariants(quot).factors
    sub_checks.append(("ii:homocyclic", homo_ok))
    witnesses.append(f"H/Z invariants {list(factors)}")

    phi = core.frattini(H)
    gamma_idx = gamma.indices()
    outside = np.flatnonzero(~phi.members)
    iii_ok = True
    bad_elem = None
    for x in outside:
        cset = core.commutator_set(H, int(x))
        if len(cset) != gamma.size or not np.array_equal(cset, gamma_idx):
            iii_ok = False
            bad_elem = int(x)
            break
    sub_checks.append(("iii:[x,H]=gamma2", iii_ok))
    if bad_elem is not None:
        witnesses.append(f"[{H.label(bad_elem)}, H] != gamma2")

    try:
        d = core.min_gen_size(H, budget)
    except BudgetExceeded as exc:
        return Verdict(check_id, BUDGET_EXCEEDED, notes=str(exc))
    even_ok = d % 2 == 0
    sub_checks.append(("iv:d-even", even_ok))
    witnesses.append(f"d={d}")

    status = PASS if all(ok for _name, ok in sub_checks) else FAIL
    notes = " ".join(f"{name}={'yes' if ok else 'NO'}" for name, ok in sub_checks)
    return Verdict(check_id, status, lhs=None, rhs=None, witnesses=tuple(witnesses), notes=notes)


def thm36_check(G: GroupTable, budget: int = DEFAULT_ISOCLINISM_BUDGET) -> Verdict:
    """A class-2 p-group with equality is isoclinic to a central product of
    Heisenberg groups; checked by explicit witness search."""
    check_id = "thm36"
    reason, eq, _p = _class2_equality_gate(G)
    if eq is not None and eq.status == BUDGET_EXCEEDED:
        return Verdict(check_id, BUDGET_EXCEEDED, notes=eq.notes)
    if reason is not None:
        return Verdict(check_id, INAPPLICABLE, notes=reason)
    gamma = core.commutator_subgroup(G).subgroup
    q = gamma.size
    d = core.min_gen_size(core.quotient(G, core.center(G)).quotient)
    if d % 2 != 0:
        return Verdict(check_id, FAIL, witnesses=(f"d={d}",),
                       notes="odd minimal generating number admits no central-product model")
    m = d // 2
    try:
        Y = families.y_group(m, q)
    except SchurlabError as exc:
        return Verdict(check_id, BUDGET_EXCEEDED, notes=f"cannot build comparison group: {exc}")
    result = isoclinism.are_isoclinic(G, Y, budget=budget)
    if result.status == isoclinism.BUDGET_EXCEEDED:
        return Verdict(check_id, BUDGET_EXCEEDED, notes=result.reason)
    if result.isoclinic:
        return Verdict(check_id, PASS, witnesses=(f"m={m}", f"q={q}"),
                       notes=f"isoclinic to the order-{Y.order} Heisenberg central product")
    return Verdict(check_id, FAIL, witnesses=(f"m={m}", f"q={q}", result.reason),
                   notes="not isoclinic to the predicted central product")


def _library_stem_candidates(G: GroupTable) -> list[tuple[str, GroupTable]]:
    """Stem candidates built from G's own invariants: for a class-2 group with
    cyclic gamma_2 of prime-power order q and even d, the Heisenberg central
    product with matching parameters is the natural witness."""
    if core.nilpotency_class(G) != 2:
        return []
    gamma = core.commutator_subgroup(G).subgroup
    if not core.is_cyclic_subgroup(gamma):
        return []
    q = gamma.size
    if core._prime_power_base(q) is None:
        return []
    try:
        d = core.min_gen_size(core.quotient(G, core.center(G)).quotient)
    except BudgetExceeded:
        return []
    if d % 2 != 0 or d == 0:
        return []
    m = d // 2
    try:
        return [(f"y_group({m},{q})", families.y_group(m, q))]
    except SchurlabError:
        return []


def stem_search(G: GroupTable, catalog: list[tuple[str, GroupTable]],
                budget: int = DEFAULT_ISOCLINISM_BUDGET) -> Verdict:
    """Search a catalog, plus library-built candidates, for a stem group
    (Z(H) <= gamma_2(H)) isoclinic to G.

    Absence from a finite candidate pool never refutes existence, so
    exhausting it yields ``inapplicable`` with a note rather than ``fail``.
    """
    check_id = "stem"
    if core.is_abelian(G):
        return Verdict(check_id, PASS, witnesses=("trivial group",),
                       notes="abelian groups are isoclinic to the trivial group")
    def is_stem(H: GroupTable) -> bool:
        return core.center(H).issubset(core.commutator_subgroup(H).subgroup)
    if is_stem(G):
        return Verdict(check_id, PASS, witnesses=("itself",), notes="the group is already stem")
    ran_out = False
    for name, H in list(catalog) + _library_stem_candidates(G):
        if H.order > G.order or not is_stem(H):
            continue
        result = isoclinism.are_isoclinic(G, H, budget=budget)
        if result.status == isoclinism.BUDGET_EXCEEDED:
            ran_out = True
            continue
        if result.isoclinic:
            return Verdict(check_id, PASS, witnesses=(name,), notes="stem witness found")
    if ran_out:
        return Verdict(check_id, BUDGET_EXCEEDED, notes="isoclinism budget exhausted during the scan")
    return Verdict(check_id, INAPPLICABLE,
                   notes="no stem witness among the candidates (existence is not refuted)")
