"""Exact arithmetic on finite groups given by dense multiplication tables.

Every group is a :class:`GroupTable`: an ``n x n`` Cayley table over element
indices ``0..n-1``.  Subgroups are boolean membership vectors over the parent
table, and every derived object (conjugacy classes, quotients, central
series) is an exact set computation on those vectors.  Tables are immutable
after construction and all functions here are pure, so results are cached on
the table itself and shared freely across threads.

Element numbering is deterministic: permutation input is closed breadth-first
in generator input order with the identity at index 0, so witnesses printed
by the verification layer are reproducible run to run.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    ClosureExceedsCap,
    MalformedPerm,
    NotAbelian,
    NotNormal,
    SchurlabError,
    TableAxiomViolation,
)

# Full O(n^3) associativity check only up to this order; above it a fixed
# sample of 10n triples is drawn from a seeded generator.  Tables built by
# our own constructors are associative by construction; the full check is
# there to guard hand-written catalog tables.
FULL_ASSOC_CAP = 512

DEFAULT_MAX_ORDER = 20000
DEFAULT_CLOSURE_BUDGET = 10_000_000

_ASSOC_SEED = 0x5C4B


def max_order_cap() -> int:
    """Order cap for constructed or parsed groups (``SCHURLAB_MAX_ORDER``)."""
    raw = os.environ.get("SCHURLAB_MAX_ORDER")
    if not raw:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError as exc:
        raise SchurlabError(f"SCHURLAB_MAX_ORDER is not an integer: {raw!r}") from exc
    if value < 1:
        raise SchurlabError("SCHURLAB_MAX_ORDER must be positive")
    return value


# ---------------------------------------------------------------------------
# permutations


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Perm:
    """Permutation of ``{1..degree}``; ``images[i-1]`` is the image of point i."""

    degree: int
    images: tuple[int, ...]

    def __post_init__(self):
        if self.degree < 1 or len(self.images) != self.degree:
            raise MalformedPerm(f"degree {self.degree} does not match image list")
        if sorted(self.images) != list(range(1, self.degree + 1)):
            raise MalformedPerm(f"images {self.images} are not a bijection on 1..{self.degree}")

    @staticmethod
    def identity(degree: int) -> "Perm":
        return Perm(degree, tuple(range(1, degree + 1)))

    @staticmethod
    def from_cycles(text: str, degree: int | None = None) -> "Perm":
        """Parse disjoint cycle notation, e.g. ``(1 2 3)(4 5)``; ``()`` is the identity."""
        stripped = text.replace(",", " ").strip()
        if not stripped:
            raise MalformedPerm("empty permutation string")
        if _CYCLE_RE.sub("", stripped).strip():
            raise MalformedPerm(f"unbalanced or stray characters in {text!r}")
        cycles: list[list[int]] = []
        points: set[int] = set()
        for body in _CYCLE_RE.findall(stripped):
            entries = body.split()
            if not entries:
                continue
            try:
                cycle = [int(tok) for tok in entries]
            except ValueError as exc:
                raise MalformedPerm(f"non-integer point in {text!r}") from exc
            for p in cycle:
                if p < 1:
                    raise MalformedPerm(f"points must be positive, got {p}")
                if p in points:
                    raise MalformedPerm(f"point {p} repeated in {text!r}")
                points.add(p)
            cycles.append(cycle)
        deg = degree if degree is not None else (max(points) if points else 1)
        if points and max(points) > deg:
            raise MalformedPerm(f"point {max(points)} exceeds degree {deg}")
        images = list(range(1, deg + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return Perm(deg, tuple(images))

    def with_degree(self, degree: int) -> "Perm":
        """Pad with fixed points up to ``degree``."""
        if degree < self.degree:
            raise MalformedPerm("cannot shrink a permutation's degree")
        if degree == self.degree:
            return self
        return Perm(degree, self.images + tuple(range(self.degree + 1, degree + 1)))

    def cycle_string(self) -> str:
        seen = [False] * self.degree
        parts = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cursor = start
            cycle = []
            while not seen[cursor]:
                seen[cursor] = True
                cycle.append(cursor + 1)
                cursor = self.images[cursor] - 1
            if len(cycle) > 1:
                parts.append("(" + " ".join(str(p) for p in cycle) + ")")
        return "".join(parts) if parts else "()"


# ---------------------------------------------------------------------------
# the central table type


class GroupTable:
    """A finite group as an explicit multiplication table.

    ``mult[a, b]`` is the index of the product ``a * b``.  The table is
    validated on construction: identity and inverse laws and the latin-square
    property are always checked in full; associativity is checked in full up
    to ``FULL_ASSOC_CAP`` and on a deterministic sample of ``10 n`` triples
    above that.
    """

    __slots__ = ("order", "mult", "identity", "inverse", "labels", "_cache")

    def __init__(
        self,
        mult,
        labels: Optional[Sequence[str]] = None,
        identity: int | None = None,
    ):
        table = np.ascontiguousarray(np.asarray(mult, dtype=np.int32))
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise TableAxiomViolation("shape", table.shape if table.ndim else ())
        n = int(table.shape[0])
        if table.min() < 0 or table.max() >= n:
            bad = np.argwhere((table < 0) | (table >= n))[0]
            raise TableAxiomViolation("range", (int(bad[0]), int(bad[1])))
        self.order = n
        self.mult = table
        self.identity = self._find_identity(identity)
        self.inverse = self._build_inverse()
        if labels is not None:
            if len(labels) != n:
                raise TableAxiomViolation("labels", (len(labels),), "label count != order")
            self.labels = tuple(str(s) for s in labels)
        else:
            self.labels = None
        self._check_latin()
        self._check_associativity()
        self.mult.flags.writeable = False
        self.inverse.flags.writeable = False
        self._cache: dict = {}

    # -- validation -----------------------------------------------------

    def _find_identity(self, given: int | None) -> int:
        n = self.order
        idx = np.arange(n, dtype=np.int32)
        if given is not None:
            if not (0 <= given < n):
                raise TableAxiomViolation("identity", (given,))
            if not (np.array_equal(self.mult[given], idx) and np.array_equal(self.mult[:, given], idx)):
                raise TableAxiomViolation("identity", (given,))
            return int(given)
        rows = np.nonzero((self.mult == idx[None, :]).all(axis=1))[0]
        for e in rows:
            if np.array_equal(self.mult[:, e], idx):
                return int(e)
        raise TableAxiomViolation("identity", (), "table has no two-sided identity")

    def _build_inverse(self) -> np.ndarray:
        n = self.order
        inv = np.full(n, -1, dtype=np.int32)
        rows, cols = np.nonzero(self.mult == self.identity)
        inv[rows] = cols
        if (inv < 0).any():
            x = int(np.nonzero(inv < 0)[0][0])
            raise TableAxiomViolation("inverse", (x,))
        # two-sided: x * inv[x] == identity must also hold with sides swapped
        if not np.array_equal(self.mult[inv, np.arange(n)], np.full(n, self.identity)):
            bad = int(np.nonzero(self.mult[inv, np.arange(n)] != self.identity)[0][0])
            raise TableAxiomViolation("inverse", (bad,))
        return inv

    def _check_latin(self):
        n = self.order
        idx = np.arange(n, dtype=np.int32)
        rows_ok = (np.sort(self.mult, axis=1) == idx[None, :]).all(axis=1)
        if not rows_ok.all():
            raise TableAxiomViolation("latin-row", (int(np.nonzero(~rows_ok)[0][0]),))
        cols_ok = (np.sort(self.mult, axis=0) == idx[:, None]).all(axis=0)
        if not cols_ok.all():
            raise TableAxiomViolation("latin-col", (int(np.nonzero(~cols_ok)[0][0]),))

    def _check_associativity(self):
        n = self.order
        m = self.mult
        if n <= FULL_ASSOC_CAP:
            for a in range(n):
                left = m[m[a]]          # left[b, c] = (a*b)*c
                right = m[a][m]         # right[b, c] = a*(b*c)
                if not np.array_equal(left, right):
                    b, c = map(int, np.argwhere(left != right)[0])
                    raise TableAxiomViolation("associativity", (a, b, c))
        else:
            rng = np.random.default_rng(_ASSOC_SEED)
            triples = rng.integers(0, n, size=(10 * n, 3))
            a, b, c = triples[:, 0], triples[:, 1], triples[:, 2]
            if not np.array_equal(m[m[a, b], c], m[a, m[b, c]]):
                bad = int(np.nonzero(m[m[a, b], c] != m[a, m[b, c]])[0][0])
                raise TableAxiomViolation("associativity", tuple(map(int, triples[bad])))

    # -- conveniences ----------------------------------------------------

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(int(x))

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return int(self.mult[self.mult[g, x], self.inverse[g]])

    def comm(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y"""
        m = self.mult
        return int(m[m[self.inverse[x], self.inverse[y]], m[x, y]])

    def __repr__(self):
        return f"GroupTable(order={self.order})"


class SubgroupMask:
    """A subgroup of a parent table: boolean membership vector plus generators."""

    __slots__ = ("parent", "members", "gens", "size")

    def __init__(self, parent: GroupTable, members, gens: Sequence[int] | None = None, *, verify: bool = True):
        mask = np.array(members, dtype=bool)  # own copy; frozen below
        if mask.shape != (parent.order,):
            raise SchurlabError("membership vector length does not match group order")
        self.parent = parent
        self.members = mask
        self.size = int(mask.sum())
        if verify:
            self._verify_subgroup()
        if gens is None:
            gens = _derive_gens(parent, mask)
        self.gens = tuple(int(g) for g in gens)
        if verify:
            gen_mask = _close_from(parent, self.gens).members if self.gens else None
            if self.gens:
                if not np.array_equal(gen_mask, mask):
                    raise SchurlabError("recorded generators do not close onto the subgroup")
            elif self.size != 1:
                raise SchurlabError("empty generator list only generates the trivial subgroup")
        self.members.flags.writeable = False

    def _verify_subgroup(self):
        G = self.parent
        if not self.members[G.identity]:
            raise SchurlabError("subgroup must contain the identity")
        idx = self.indices()
        if not self.members[G.inverse[idx]].all():
            raise SchurlabError("subgroup not closed under inversion")
        prods = G.mult[np.ix_(idx, idx)]
        if not self.members[prods].all():
            raise SchurlabError("subgroup not closed under multiplication")

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.members)

    def contains(self, x: int) -> bool:
        return bool(self.members[x])

    def issubset(self, other: "SubgroupMask") -> bool:
        return bool((~other.members[self.indices()]).sum() == 0)

    def same_as(self, other: "SubgroupMask") -> bool:
        return np.array_equal(self.members, other.members)

    def label_list(self) -> list[str]:
        return [self.parent.label(i) for i in self.indices()]

    def __repr__(self):
        return f"SubgroupMask(size={self.size} of {self.parent.order})"


@dataclass(frozen=True)
class ConjClass:
    """Conjugacy class: representative, membership vector, and size."""

    rep: int
    members: np.ndarray
    size: int


@dataclass(frozen=True)
class QuotientMap:
    """Quotient of ``parent`` by the normal subgroup ``kernel``.

    ``project[x]`` is the coset index of element ``x``; ``reps[c]`` is the
    smallest element of coset ``c``, so coset 0 is the coset of the identity.
    """

    parent: GroupTable
    kernel: SubgroupMask
    reps: np.ndarray
    quotient: GroupTable
    project: np.ndarray


class CommutatorData(NamedTuple):
    subgroup: SubgroupMask
    commutators: np.ndarray  # boolean mask of the raw commutator set K(G)


class AbelianBasis(NamedTuple):
    factors: tuple[int, ...]
    basis: tuple[int, ...]


class ClosureBudget:
    """Counts closure invocations; exhausting it raises BudgetExceeded."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_CLOSURE_BUDGET):
        self.limit = int(limit)
        self.used = 0

    def charge(self, amount: int = 1):
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(f"closure budget of {self.limit} exhausted")


# ---------------------------------------------------------------------------
# closure primitives


def _coset_ids(G: GroupTable, base_idx: np.ndarray) -> np.ndarray:
    """Canonical right-coset id (minimum member) of every element."""
    if len(base_idx) == 1:
        return np.arange(G.order)
    return G.mult[base_idx, :].min(axis=0)


def _extend_closure(G: GroupTable, base_idx: np.ndarray, base_gens: Sequence[int], c: int,
                    budget: ClosureBudget | None = None,
                    ids: np.ndarray | None = None) -> tuple[np.ndarray | None, int]:
    """Membership mask of ``<base, c>`` where ``base`` is already a subgroup.

    Walks the right-coset graph of the base subgroup under the old generators
    plus ``c``; each visited coset contributes a block of ``|base|`` members.
    ``ids`` may carry a precomputed :func:`_coset_ids` array for the base.
    Returns ``(mask, size)``; the mask is ``None`` when the extension is the
    whole group (callers usually only need to know that).
    """
    if budget is not None:
        budget.charge()
    m = G.mult
    n = G.order
    k = len(base_idx)
    if ids is None:
        ids = _coset_ids(G, base_idx)
    gens = [int(c)] + [int(g) for g in base_gens]
    seen = {int(ids[G.identity])}
    queue = [G.identity]
    while queue:
        x = queue.pop()
        for g in gens:
            y = int(m[x, g])
            cid = int(ids[y])
            if cid not in seen:
                seen.add(cid)
                queue.append(y)
    size = len(seen) * k
    if size == n:
        return None, n
    flags = np.zeros(n, dtype=bool)
    flags[list(seen)] = True
    return flags[ids], size


def _close_from(G: GroupTable, gens: Iterable[int], budget: ClosureBudget | None = None) -> SubgroupMask:
    """Smallest subgroup containing ``gens`` (internal; skips re-verification)."""
    idx = np.array([G.identity], dtype=np.int64)
    chain: list[int] = []
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity] = True
    for g in gens:
        g = int(g)
        if mask[g]:
            continue
        mask, _size = _extend_closure(G, idx, chain, g, budget)
        if mask is None:
            mask = np.ones(G.order, dtype=bool)
        chain.append(g)
        idx = np.flatnonzero(mask)
    return SubgroupMask(G, mask, chain, verify=False)


def _derive_gens(G: GroupTable, mask: np.ndarray) -> list[int]:
    """Greedy small generating list for a subgroup given by membership mask."""
    gens: list[int] = []
    cur = np.zeros(G.order, dtype=bool)
    cur[G.identity] = True
    idx = np.array([G.identity], dtype=np.int64)
    target = int(mask.sum())
    while int(cur.sum()) < target:
        missing = np.flatnonzero(mask & ~cur)
        g = int(missing[0])
        cur, _size = _extend_closure(G, idx, gens, g)
        if cur is None:
            cur = np.ones(G.order, dtype=bool)
        gens.append(g)
        idx = np.flatnonzero(cur)
    return gens


def closure(G: GroupTable, gens: Sequence[int]) -> SubgroupMask:
    """Smallest subgroup of ``G`` containing ``gens``; generators are recorded."""
    for g in gens:
        if not (0 <= int(g) < G.order):
            raise SchurlabError(f"generator index {g} out of range")
    sub = _close_from(G, gens)
    return SubgroupMask(G, sub.members, [int(g) for g in gens] if gens else [], verify=True)


# ---------------------------------------------------------------------------
# permutation input


def from_perms(gens: Sequence[Perm], cap: int | None = None) -> GroupTable:
    """Multiplication table of ``<gens>`` enumerated breadth-first.

    Element 0 is the identity; new elements are numbered in discovery order,
    applying generators in input order (products ``x * g``, where ``(p*q)(i)
    = p(q(i))``).  Labels are cycle strings.
    """
    if cap is None:
        cap = max_order_cap()
    if cap < 1:
        raise SchurlabError("cap must be positive")
    if not gens:
        gens = [Perm.identity(1)]
    degree = gens[0].degree
    for p in gens:
        if p.degree != degree:
            raise MalformedPerm("generators must share one degree")
    arrs = [np.array(p.images, dtype=np.int32) - 1 for p in gens]
    ident = np.arange(degree, dtype=np.int32)
    elems = [ident]
    index: dict[bytes, int] = {ident.tobytes(): 0}
    head = 0
    while head < len(elems):
        x = elems[head]
        head += 1
        for g in arrs:
            y = x[g]  # (x*g)(i) = x(g(i))
            key = y.tobytes()
            if key not in index:
                if len(elems) >= cap:
                    raise ClosureExceedsCap(f"closure exceeds cap {cap}")
                index[key] = len(elems)
                elems.append(y)
    n = len(elems)
    stack = np.ascontiguousarray(np.stack(elems))
    # products are looked up by binary search over byte-lexicographic keys
    void = np.dtype((np.void, stack.dtype.itemsize * degree))
    keys = stack.view(void).ravel()
    order = np.argsort(keys)
    sorted_keys = keys[order]
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        composed = np.ascontiguousarray(stack[i][stack])  # row j = elems[i] o elems[j]
        pos = np.searchsorted(sorted_keys, composed.view(void).ravel())
        table[i] = order[pos]
    labels = [Perm(degree, tuple(int(v) + 1 for v in row)).cycle_string() for row in elems]
    return GroupTable(table, labels=labels, identity=0)


# ---------------------------------------------------------------------------
# cached structural computations


def _cached(G: GroupTable, key: str, build):
    try:
        return G._cache[key]
    except KeyError:
        value = build()
        G._cache[key] = value
        return value


def center(G: GroupTable) -> SubgroupMask:
    """Z(G): all elements whose row and column in the table agree."""
    def build():
        mask = (G.mult == G.mult.T).all(axis=1)
        return SubgroupMask(G, mask, verify=False)
    return _cached(G, "center", build)


def is_abelian(G: GroupTable) -> bool:
    return center(G).size == G.order


def centralizer(G: GroupTable, target) -> SubgroupMask:
    """Elements commuting with ``target`` (an element index or a SubgroupMask)."""
    if isinstance(target, SubgroupMask):
        mask = np.ones(G.order, dtype=bool)
        for h in target.indices():
            mask &= G.mult[h] == G.mult[:, h]
        return SubgroupMask(G, mask, verify=False)
    x = int(target)
    if not (0 <= x < G.order):
        raise SchurlabError(f"element index {x} out of range")
    return SubgroupMask(G, G.mult[x] == G.mult[:, x], verify=False)


def commutator_subgroup(G: GroupTable) -> CommutatorData:
    """gamma_2(G) together with the raw commutator set K(G)."""
    def build():
        m = G.mult
        n = G.order
        ab = m
        t1 = m[G.inverse[None, :], ab]        # y^-1 (x y)
        vals = m[G.inverse[:, None], t1]      # x^-1 y^-1 x y
        kmask = np.zeros(n, dtype=bool)
        kmask[vals.ravel()] = True
        sub = _close_from(G, np.flatnonzero(kmask))
        kmask.flags.writeable = False
        return CommutatorData(sub, kmask)
    return _cached(G, "gamma2", build)


def commutator_set(G: GroupTable, x: int) -> np.ndarray:
    """Sorted indices of [x, G] = { [x, g] : g in G }."""
    m = G.mult
    t = m[x]                                  # x g
    u = m[G.inverse, t]                       # g^-1 x g
    v = m[G.inverse[x]][u]                    # x^-1 g^-1 x g
    return np.unique(v)


def element_orders(G: GroupTable) -> np.ndarray:
    """Order of every element, by powering the whole element array at once."""
    def build():
        n = G.order
        idx = np.arange(n)
        cur = idx.copy()
        orders = np.zeros(n, dtype=np.int64)
        orders[G.identity] = 1
        k = 1
        while (orders == 0).any():
            k += 1
            cur = G.mult[cur, idx]
            hit = (orders == 0) & (cur == G.identity)
            orders[hit] = k
            if k > n:
                raise SchurlabError("element order exceeds group order; corrupt table")
        orders.flags.writeable = False
        return orders
    return _cached(G, "orders", build)


def exponent(H: SubgroupMask) -> int:
    """lcm of the element orders inside ``H``."""
    orders = element_orders(H.parent)[H.indices()]
    return int(math.lcm(*[int(o) for o in orders]))


def conjugacy_classes(G: GroupTable) -> list[ConjClass]:
    """Partition into conjugacy classes, ordered by smallest member index."""
    def build():
        n = G.order
        assigned = np.full(n, -1, dtype=np.int64)
        classes: list[ConjClass] = []
        inv = G.inverse
        all_g = np.arange(n)
        for x in range(n):
            if assigned[x] >= 0:
                continue
            conj = G.mult[G.mult[all_g, x], inv[all_g]]
            members = np.zeros(n, dtype=bool)
            members[conj] = True
            members.flags.writeable = False
            assigned[np.flatnonzero(members)] = len(classes)
            classes.append(ConjClass(rep=x, members=members, size=int(members.sum())))
        G._cache["class_index"] = assigned
        return classes
    return _cached(G, "classes", build)


def class_of(G: GroupTable, x: int) -> ConjClass:
    classes = conjugacy_classes(G)
    return classes[int(G._cache["class_index"][x])]


def quotient(G: GroupTable, N: SubgroupMask) -> QuotientMap:
    """G/N with coset representatives chosen as smallest element per coset."""
    if N.parent is not G:
        raise SchurlabError("subgroup belongs to a different table")
    key = ("quotient", N.members.tobytes())
    def build():
        n = G.order
        nidx = N.indices()
        # normality: g h g^-1 stays inside N for every g
        for g in range(n):
            conj = G.mult[G.mult[g, nidx], G.inverse[g]]
            if not N.members[conj].all():
                bad = int(nidx[int(np.nonzero(~N.members[conj])[0][0])])
                raise NotNormal(f"conjugate of element {bad} by {g} leaves the subgroup")
        project = np.full(n, -1, dtype=np.int32)
        reps: list[int] = []
        for x in range(n):
            if project[x] >= 0:
                continue
            coset = G.mult[nidx, x]
            project[coset] = len(reps)
            reps.append(x)
        reps_arr = np.array(reps, dtype=np.int32)
        q = len(reps)
        qtable = project[G.mult[np.ix_(reps_arr, reps_arr)]]
        labels = None
        if G.labels is not None:
            labels = [G.labels[r] for r in reps]
        qgroup = GroupTable(qtable, labels=labels, identity=0)
        # homomorphism property over all pairs
        if not np.array_equal(qgroup.mult[project[:, None], project[None, :]], project[G.mult]):
            raise SchurlabError("quotient table failed the homomorphism check")
        project.flags.writeable = False
        reps_arr.flags.writeable = False
        return QuotientMap(parent=G, kernel=N, reps=reps_arr, quotient=qgroup, project=project)
    return _cached(G, key, build)


class SubTable(NamedTuple):
    table: GroupTable
    to_parent: np.ndarray  # local index -> parent element index


def subgroup_table(G: GroupTable, H: SubgroupMask) -> SubTable:
    """``H`` reindexed as a standalone GroupTable (the parent itself if H = G)."""
    if H.parent is not G:
        raise SchurlabError("subgroup belongs to a different table")
    if H.size == G.order:
        return SubTable(G, np.arange(G.order, dtype=np.int32))
    key = ("subtable", H.members.tobytes())
    def build():
        idx = H.indices().astype(np.int32)
        local = np.full(G.order, -1, dtype=np.int32)
        local[idx] = np.arange(len(idx), dtype=np.int32)
        table = local[G.mult[np.ix_(idx, idx)]]
        labels = [G.label(i) for i in idx] if G.labels is not None else None
        sub = GroupTable(table, labels=labels, identity=int(local[G.identity]))
        idx.flags.writeable = False
        return SubTable(sub, idx)
    return _cached(G, key, build)


def upper_central_series(G: GroupTable) -> list[SubgroupMask]:
    """Z_1 <= Z_2 <= ... until stabilization (always contains Z_1 = Z(G))."""
    def build():
        terms = [center(G)]
        while True:
            Z = terms[-1]
            if Z.size == G.order:
                break
            q = quotient(G, Z)
            zq = center(q.quotient)
            pre = zq.members[q.project]
            if int(pre.sum()) == Z.size:
                break
            terms.append(SubgroupMask(G, pre, verify=False))
        return terms
    return _cached(G, "ucs", build)


def second_center(G: GroupTable) -> SubgroupMask:
    series = upper_central_series(G)
    return series[1] if len(series) > 1 else series[0]


def nilpotency_class(G: GroupTable) -> int | None:
    """Length of the upper central series when it reaches G, else None."""
    if G.order == 1:
        return 0
    series = upper_central_series(G)
    if series[-1].size == G.order:
        return len(series)
    return None


# ---------------------------------------------------------------------------
# subgroup search: minimal generation and the Frattini subgroup


def _bfs_subgroups(G: GroupTable, budget: ClosureBudget | None, *,
                   first_level_class_minimal: bool, stop_at_full: bool):
    """Breadth-first walk over subgroups, extending one generator at a time.

    Every subgroup of ``G`` is ``<a_1, ..., a_k>`` for a strictly increasing
    chain of subgroups, and ``<K, c>`` only depends on the right coset ``Kc``,
    so extensions range over one representative per coset.  With
    ``first_level_class_minimal`` the first generator is restricted to
    conjugacy class representatives (sound for reachability-of-G questions,
    not for full lattice enumeration).

    Returns ``(found_full_gens, levels)`` where ``levels[k]`` lists
    ``(mask, gens)`` pairs discovered with ``k+1`` generators.
    """
    n = G.order
    m = G.mult
    trivial = np.zeros(n, dtype=bool)
    trivial[G.identity] = True
    seen: set[bytes] = {trivial.tobytes()}
    frontier: list[tuple[np.ndarray, tuple[int, ...]]] = [(trivial, ())]
    levels: list[list[tuple[np.ndarray, tuple[int, ...]]]] = []
    full_count = n
    full_key = np.ones(n, dtype=bool).tobytes()
    while frontier:
        nxt: list[tuple[np.ndarray, tuple[int, ...]]] = []
        for mask, gens in frontier:
            idx = np.flatnonzero(mask)
            ids = _coset_ids(G, idx)
            if not gens and first_level_class_minimal:
                candidates = [c.rep for c in conjugacy_classes(G) if c.rep != G.identity]
            else:
                # right-coset representatives: each coset Kx is named by its
                # minimum member, so reps are the fixed points of the id map
                candidates = np.flatnonzero((ids == np.arange(n)) & ~mask).tolist()
            for c in candidates:
                new_mask, new_size = _extend_closure(G, idx, gens, c, budget, ids=ids)
                if new_size == full_count:
                    if stop_at_full:
                        return gens + (int(c),), levels
                    new_mask = np.ones(n, dtype=bool)
                    key = full_key
                else:
                    key = new_mask.tobytes()
                if key in seen:
                    continue
                seen.add(key)
                nxt.append((new_mask, gens + (int(c),)))
        if nxt:
            levels.append(nxt)
        frontier = nxt
    return None, levels


def min_generating_set(G: GroupTable, budget: int | None = None) -> list[int]:
    """A smallest-cardinality generating set, found by exhaustive level search.

    For prime-power order the result is cross-checked against the Burnside
    basis dimension of ``G`` over its Frattini quotient.
    """
    def build():
        if G.order == 1:
            return []
        counter = ClosureBudget(budget if budget is not None else DEFAULT_CLOSURE_BUDGET)
        gens, _levels = _bfs_subgroups(G, counter, first_level_class_minimal=True, stop_at_full=True)
        if gens is None:
            raise SchurlabError("subgroup search terminated without generating the group")
        p = _prime_power_base(G.order)
        if p is not None:
            phi = _frattini_pgroup(G, p)
            quot = G.order // phi.size
            rank = round(math.log(quot, p))
            if p ** rank != quot:
                raise SchurlabError("Frattini quotient of a p-group is not elementary abelian")
            if rank != len(gens):
                raise SchurlabError(
                    f"minimal generation search ({len(gens)}) disagrees with the "
                    f"Burnside basis rank ({rank})"
                )
        return list(gens)
    if budget is None:
        return list(_cached(G, "mingen", build))
    return build()


def min_gen_size(G: GroupTable, budget: int | None = None) -> int:
    """Minimum cardinality of a generating set (0 for the trivial group)."""
    return len(min_generating_set(G, budget))


def _prime_power_base(n: int) -> int | None:
    if n < 2:
        return None
    p = _smallest_prime_factor(n)
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def _frattini_pgroup(G: GroupTable, p: int) -> SubgroupMask:
    """Frattini subgroup of a p-group via gamma_2(G) * G^p."""
    key = ("frattini_pgroup", p)
    def build():
        powers = np.arange(G.order)
        for _ in range(p - 1):
            powers = G.mult[powers, np.arange(G.order)]
        seeds = np.flatnonzero(commutator_subgroup(G).subgroup.members).tolist()
        seeds += sorted(set(int(x) for x in powers))
        return _close_from(G, seeds)
    return _cached(G, key, build)


def subgroup_lattice(G: GroupTable) -> list[np.ndarray]:
    """Membership masks of every subgroup of ``G`` (including trivial and G)."""
    def build():
        trivial = np.zeros(G.order, dtype=bool)
        trivial[G.identity] = True
        _found, levels = _bfs_subgroups(G, None, first_level_class_minimal=False, stop_at_full=False)
        masks = [trivial]
        for level in levels:
            masks.extend(mask for mask, _gens in level)
        return masks
    return _cached(G, "lattice", build)


def maximal_subgroups(G: GroupTable) -> list[SubgroupMask]:
    """All maximal subgroups, by inclusion over the full subgroup lattice."""
    def build():
        if G.order == 1:
            return []
        masks = [m for m in subgroup_lattice(G) if int(m.sum()) < G.order]
        packed = [(int(m.sum()), int.from_bytes(np.packbits(m).tobytes(), "little"), m) for m in masks]
        packed.sort(key=lambda t: (-t[0], t[1]))
        maximal: list[tuple[int, int, np.ndarray]] = []
        out = []
        for size, bits, mask in packed:
            if any(bits | other_bits == other_bits for osize, other_bits, _ in maximal if osize > size):
                continue
            maximal.append((size, bits, mask))
            out.append(SubgroupMask(G, mask, verify=False))
        return out
    return _cached(G, "maximal", build)


def frattini(G: GroupTable) -> SubgroupMask:
    """Intersection of all maximal subgroups (whole group when there are none).

    For prime-power order the definitional value is cross-checked against the
    closed form gamma_2(G) * G^p.
    """
    def build():
        maxes = maximal_subgroups(G)
        if not maxes:
            return SubgroupMask(G, np.ones(G.order, dtype=bool), verify=False)
        mask = np.ones(G.order, dtype=bool)
        for sub in maxes:
            mask &= sub.members
        phi = SubgroupMask(G, mask, verify=False)
        p = _prime_power_base(G.order)
        if p is not None:
            formula = _frattini_pgroup(G, p)
            if not phi.same_as(formula):
                raise SchurlabError("Frattini cross-check failed for a p-group")
        return phi
    return _cached(G, "frattini", build)


# ---------------------------------------------------------------------------
# abelian invariants


def abelian_invariants(A: GroupTable) -> AbelianBasis:
    """Invariant factors d_1 | d_2 | ... | d_k with one basis element each.

    Repeatedly splits off a maximal-order element: the quotient by it is
    decomposed recursively, and each quotient basis coset is lifted to a
    representative of the same order, which forces a direct decomposition.
    """
    if not is_abelian(A):
        raise NotAbelian(f"group of order {A.order} is not abelian")
    def build():
        pairs = _abelian_basis(A)
        factors = tuple(d for d, _x in pairs)
        basis = tuple(x for _d, x in pairs)
        if math.prod(factors) != A.order:
            raise SchurlabError("invariant factor product mismatch")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                raise SchurlabError("invariant factors do not form a divisibility chain")
        return AbelianBasis(factors, basis)
    return _cached(A, "abelian_invariants", build)


def _abelian_basis(A: GroupTable) -> list[tuple[int, int]]:
    if A.order == 1:
        return []
    orders = element_orders(A)
    m = int(orders.max())
    a = int(np.flatnonzero(orders == m)[0])
    q = quotient(A, closure(A, [a]))
    out: list[tuple[int, int]] = []
    for d, qelem in _abelian_basis(q.quotient):
        coset = np.flatnonzero(q.project == qelem)
        match = coset[orders[coset] == d]
        if len(match) == 0:
            raise SchurlabError("no order-preserving lift in abelian decomposition")
        out.append((d, int(match[0])))
    out.append((m, a))
    return out


def is_homocyclic(A: GroupTable) -> bool:
    factors = abelian_invariants(A).factors
    return len(set(factors)) <= 1


def is_cyclic_subgroup(H: SubgroupMask) -> bool:
    """True when some element of H generates all of H."""
    orders = element_orders(H.parent)[H.indices()]
    return bool((orders == H.size).any())
