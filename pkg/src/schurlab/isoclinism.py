"""Isoclinism of finite groups: the commutator pairing and a witness search.

Two groups are isoclinic when there are isomorphisms ``phi`` of their central
quotients and ``theta`` of their commutator subgroups that commute with the
pairing ``(aZ, bZ) -> [a, b]``.  The search assigns images only to a minimal
generating set of ``G/Z(G)``; the pairing forces ``theta`` on commutators,
which generate the commutator subgroup, so ``theta`` is derived rather than
searched.  Fast invariant fingerprints certify most non-isoclinic pairs
without any search.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import core
from .core import GroupTable, QuotientMap, SubgroupMask
from .errors import SchurlabError
from .isomorphism import forced_extension

DEFAULT_NODE_BUDGET = 100_000_000

# The witness search is worst-case factorial in the central quotient; this
# tool targets desk-scale instances.
MAX_QUOTIENT_ORDER = 4096

ISOCLINIC = "isoclinic"
NOT_ISOCLINIC = "not_isoclinic"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class CommutatorPairing:
    """The map (aZ, bZ) -> [a, b] as a dense table over coset indices."""

    base: QuotientMap
    target: SubgroupMask
    pairing: np.ndarray


@dataclass(frozen=True)
class IsoclinismWitness:
    """phi maps coset indices of G/Z(G) to coset indices of H/Z(H); theta maps
    the i-th smallest element of gamma_2(G) to an element index of H."""

    phi: np.ndarray
    theta_domain: np.ndarray
    theta_image: np.ndarray


@dataclass(frozen=True)
class IsoclinismResult:
    status: str
    witness: IsoclinismWitness | None = None
    reason: str = ""
    nodes: int = 0

    @property
    def isoclinic(self) -> bool:
        return self.status == ISOCLINIC


def commutator_pairing(G: GroupTable) -> CommutatorPairing:
    """Full pairing table for G, with well-definedness asserted on a second
    set of coset representatives."""
    def build():
        q = core.quotient(G, core.center(G))
        gamma = core.commutator_subgroup(G).subgroup
        table = _pairing_from_reps(G, q.reps)
        if not gamma.members[table].all():
            raise SchurlabError("commutator pairing left the commutator subgroup")
        # independence from representatives: redo with another rep per coset
        second = _second_reps(G, q)
        if not np.array_equal(table, _pairing_from_reps(G, second)):
            raise SchurlabError("commutator pairing depends on coset representatives")
        nq = q.quotient.order
        diag = table[np.arange(nq), np.arange(nq)]
        if not (diag == G.identity).all():
            raise SchurlabError("pairing(a, a) must be the identity")
        if not np.array_equal(table.T, G.inverse[table]):
            raise SchurlabError("pairing(a, b) must invert pairing(b, a)")
        table.flags.writeable = False
        return CommutatorPairing(base=q, target=gamma, pairing=table)
    return core._cached(G, "pairing", build)


def _pairing_from_reps(G: GroupTable, reps: np.ndarray) -> np.ndarray:
    m = G.mult
    inv = G.inverse
    xy = m[np.ix_(reps, reps)]
    left = m[np.ix_(inv[reps], inv[reps])]
    return m[left, xy]


def _second_reps(G: GroupTable, q: QuotientMap) -> np.ndarray:
    """For each coset, the largest member (equals the smallest iff |Z| = 1)."""
    nq = q.quotient.order
    second = np.zeros(nq, dtype=np.int64)
    for c in range(nq):
        members = np.flatnonzero(q.project == c)
        second[c] = members[-1]
    return second


@dataclass(frozen=True)
class Fingerprint:
    """Isoclinism invariants; unequal fingerprints certify non-isoclinism."""

    quotient_order: int
    gamma2_order: int
    gamma2_element_orders: tuple
    quotient_element_orders: tuple
    quotient_abelian_invariants: tuple | None
    pairing_rows: tuple

    def mismatch(self, other: "Fingerprint") -> str | None:
        for name in (
            "quotient_order",
            "gamma2_order",
            "gamma2_element_orders",
            "quotient_element_orders",
            "quotient_abelian_invariants",
            "pairing_rows",
        ):
            if getattr(self, name) != getattr(other, name):
                return name
        return None


def invariant_fingerprint(G: GroupTable) -> Fingerprint:
    def build():
        pairing = commutator_pairing(G)
        q = pairing.base.quotient
        gamma_idx = pairing.target.indices()
        g_orders = core.element_orders(G)
        rows = _pairing_row_profiles(G, pairing.pairing)
        qinv = None
        if core.is_abelian(q):
            qinv = core.abelian_invariants(q).factors
        return Fingerprint(
            quotient_order=q.order,
            gamma2_order=pairing.target.size,
            gamma2_element_orders=tuple(sorted(int(o) for o in g_orders[gamma_idx])),
            quotient_element_orders=tuple(sorted(int(o) for o in core.element_orders(q))),
            quotient_abelian_invariants=qinv,
            pairing_rows=tuple(sorted(rows)),
        )
    return core._cached(G, "fingerprint", build)


def _pairing_row_profiles(G: GroupTable, pairing: np.ndarray) -> list[tuple]:
    """Per coset: the sorted multiset of orders of its pairing values."""
    orders = core.element_orders(G)
    return [tuple(sorted(int(o) for o in orders[row])) for row in pairing]


def are_isoclinic(G: GroupTable, H: GroupTable, budget: int = DEFAULT_NODE_BUDGET) -> IsoclinismResult:
    """Decide isoclinism; sound in both directions.

    ``isoclinic`` always carries a witness that has been re-verified by the
    full-table check; ``not_isoclinic`` means a fingerprint mismatch or an
    exhausted complete search.  Budget exhaustion is a distinct outcome and
    must not be read as a negative answer.
    """
    # cheap gates first: the fingerprint itself builds the full pairing table,
    # which the size guard exists to avoid
    qg_order = G.order // core.center(G).size
    qh_order = H.order // core.center(H).size
    if qg_order != qh_order:
        return IsoclinismResult(NOT_ISOCLINIC, reason="fingerprint mismatch: quotient_order")
    gamma_g = core.commutator_subgroup(G).subgroup.size
    gamma_h = core.commutator_subgroup(H).subgroup.size
    if gamma_g != gamma_h:
        return IsoclinismResult(NOT_ISOCLINIC, reason="fingerprint mismatch: gamma2_order")
    if qg_order > MAX_QUOTIENT_ORDER:
        return IsoclinismResult(
            BUDGET_EXCEEDED,
            reason=f"central quotient order {qg_order} exceeds search limit {MAX_QUOTIENT_ORDER}",
        )
    fg, fh = invariant_fingerprint(G), invariant_fingerprint(H)
    bad = fg.mismatch(fh)
    if bad is not None:
        return IsoclinismResult(NOT_ISOCLINIC, reason=f"fingerprint mismatch: {bad}")

    pg, ph = commutator_pairing(G), commutator_pairing(H)
    qg, qh = pg.base.quotient, ph.base.quotient

    if qg.order == 1:
        witness = IsoclinismWitness(
            phi=np.zeros(1, dtype=np.int64),
            theta_domain=np.array([G.identity], dtype=np.int64),
            theta_image=np.array([H.identity], dtype=np.int64),
        )
        assert verify_witness(G, H, witness)
        return IsoclinismResult(ISOCLINIC, witness=witness)

    gens = core.min_generating_set(qg)
    rows_g = _pairing_row_profiles(G, pg.pairing)
    rows_h = _pairing_row_profiles(H, ph.pairing)
    qg_orders = core.element_orders(qg)
    qh_orders = core.element_orders(qh)
    rarity: dict[tuple, int] = {}
    for row in rows_h:
        rarity[row] = rarity.get(row, 0) + 1
    candidates: list[list[int]] = []
    for g in gens:
        opts = [
            h for h in range(qh.order)
            if rows_h[h] == rows_g[g] and qh_orders[h] == qg_orders[g]
        ]
        opts.sort(key=lambda h: (rarity[rows_h[h]], h))
        if not opts:
            return IsoclinismResult(NOT_ISOCLINIC, reason="no image candidates for a quotient generator")
        candidates.append(opts)

    state = _SearchState(budget)
    try:
        witness = _search(G, H, pg, ph, gens, candidates, state)
    except _OutOfBudget:
        return IsoclinismResult(BUDGET_EXCEEDED, reason="node budget exhausted", nodes=state.nodes)
    if witness is None:
        return IsoclinismResult(NOT_ISOCLINIC, reason="search space exhausted", nodes=state.nodes)
    assert verify_witness(G, H, witness)
    return IsoclinismResult(ISOCLINIC, witness=witness, nodes=state.nodes)


class _OutOfBudget(Exception):
    pass


class _SearchState:
    __slots__ = ("budget", "nodes")

    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget


def _search(G, H, pg, ph, gens, candidates, state) -> IsoclinismWitness | None:
    qg, qh = pg.base.quotient, ph.base.quotient
    nq = qg.order

    def dfs(k: int, images: list[int]):
        if k == len(gens):
            return _finish(G, H, pg, ph, gens, images)
        for h in candidates[k]:
            state.tick()
            ext = forced_extension(
                qg.mult, qh.mult,
                [qg.identity] + gens[: k + 1],
                [qh.identity] + images + [h],
            )
            if ext is None:
                continue
            dom, img = ext
            if not _pairing_consistent(pg.pairing, ph.pairing, dom, img, G, H):
                continue
            found = dfs(k + 1, images + [h])
            if found is not None:
                return found
        return None

    return dfs(0, [])


def _pairing_consistent(pair_g, pair_h, dom, img, G, H) -> bool:
    """theta must be a well-defined injective map on the pairing values seen so far."""
    u = pair_g[np.ix_(dom, dom)].ravel()
    v = pair_h[np.ix_(img, img)].ravel()
    order = np.argsort(u, kind="stable")
    u, v = u[order], v[order]
    uniq, starts = np.unique(u, return_index=True)
    lo = np.minimum.reduceat(v, starts)
    hi = np.maximum.reduceat(v, starts)
    if not np.array_equal(lo, hi):
        return False
    if len(np.unique(lo)) != len(uniq):
        return False
    # orders must match or theta cannot extend to an isomorphism
    return bool(np.array_equal(core.element_orders(G)[uniq], core.element_orders(H)[lo]))


def _finish(G, H, pg, ph, gens, images) -> IsoclinismWitness | None:
    qg, qh = pg.base.quotient, ph.base.quotient
    ext = forced_extension(qg.mult, qh.mult, [qg.identity] + gens, [qh.identity] + images)
    if ext is None:
        return None
    dom, img = ext
    if len(dom) != qg.order:
        raise SchurlabError("minimal generating set failed to span the central quotient")
    phi = np.empty(qg.order, dtype=np.int64)
    phi[dom] = img

    # theta is forced on all commutators; extend it over gamma_2 via the
    # subgroup tables and verify it closes into a bijective homomorphism.
    sub_g = core.subgroup_table(G, pg.target)
    sub_h = core.subgroup_table(H, ph.target)
    loc_g = np.full(G.order, -1, dtype=np.int64)
    loc_g[sub_g.to_parent] = np.arange(pg.target.size)
    loc_h = np.full(H.order, -1, dtype=np.int64)
    loc_h[sub_h.to_parent] = np.arange(ph.target.size)

    u = pg.pairing.ravel()
    v = ph.pairing[np.ix_(phi, phi)].ravel()
    seed_dom = loc_g[u]
    seed_img = loc_h[v]
    if (seed_dom < 0).any() or (seed_img < 0).any():
        raise SchurlabError("pairing values escaped the commutator subgroup")
    ext2 = forced_extension(sub_g.table.mult, sub_h.table.mult, seed_dom.tolist(), seed_img.tolist())
    if ext2 is None:
        return None
    tdom, timg = ext2
    if len(tdom) != pg.target.size or len(np.unique(timg)) != ph.target.size:
        return None
    theta_local = np.empty(pg.target.size, dtype=np.int64)
    theta_local[tdom] = timg
    theta_domain = sub_g.to_parent.astype(np.int64)
    theta_image = sub_h.to_parent[theta_local].astype(np.int64)

    # the commuting square, over every pair of cosets
    theta_global = np.full(G.order, -1, dtype=np.int64)
    theta_global[theta_domain] = theta_image
    if not np.array_equal(theta_global[pg.pairing], ph.pairing[np.ix_(phi, phi)]):
        return None
    return IsoclinismWitness(phi=phi, theta_domain=theta_domain, theta_image=theta_image)


def verify_witness(G: GroupTable, H: GroupTable, w: IsoclinismWitness) -> bool:
    """Independent full-table verification of a claimed isoclinism."""
    pg, ph = commutator_pairing(G), commutator_pairing(H)
    qg, qh = pg.base.quotient, ph.base.quotient
    phi = w.phi
    if qg.order != qh.order or len(phi) != qg.order:
        return False
    if len(np.unique(phi)) != qg.order:
        return False
    if not np.array_equal(phi[qg.mult], qh.mult[phi[:, None], phi[None, :]]):
        return False
    gamma_g = pg.target.indices()
    if not np.array_equal(np.sort(w.theta_domain), gamma_g):
        return False
    if len(np.unique(w.theta_image)) != ph.target.size:
        return False
    if not ph.target.members[w.theta_image].all():
        return False
    theta = np.full(G.order, -1, dtype=np.int64)
    theta[w.theta_domain] = w.theta_image
    # theta is a homomorphism on gamma_2(G)
    dg = w.theta_domain
    if not np.array_equal(theta[G.mult[np.ix_(dg, dg)]], H.mult[np.ix_(theta[dg], theta[dg])]):
        return False
    # the square commutes on all pairs of cosets
    return bool(np.array_equal(theta[pg.pairing], ph.pairing[np.ix_(phi, phi)]))
