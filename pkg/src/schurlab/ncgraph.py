"""Non-commuting graphs and exact maximum cliques.

Vertices are the non-central elements (optionally intersected with a
subgroup), edges join pairs that fail to commute.  The clique solver is an
exact branch-and-bound over bitset adjacency with greedy-coloring bounds;
there is no approximation mode, only a node budget that returns the best
clique found so far when exhausted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import core
from .core import GroupTable, SubgroupMask
from .errors import SchurlabError

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class NcGraph:
    """vertices[i] is an element index of ``source``; adjacency is symmetric."""

    vertices: np.ndarray
    adjacency: np.ndarray
    source: GroupTable
    restriction: SubgroupMask | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as pairs of element indices, lexicographically ordered."""
        out = []
        for i in range(self.vertex_count):
            for j in range(i + 1, self.vertex_count):
                if self.adjacency[i, j]:
                    out.append((int(self.vertices[i]), int(self.vertices[j])))
        return out


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple[int, ...]  # element indices in the source group
    complete: bool            # False when the node budget ran out
    nodes: int


def build_graph(G: GroupTable, restriction: SubgroupMask | None = None) -> NcGraph:
    """Graph on (restriction intersect G) minus Z(G); edge iff the pair does not commute."""
    if restriction is not None and restriction.parent is not G:
        raise SchurlabError("restriction mask belongs to a different group")
    mask = ~core.center(G).members
    if restriction is not None:
        mask = mask & restriction.members
    vertices = np.flatnonzero(mask)
    sub = G.mult[np.ix_(vertices, vertices)]
    adjacency = sub != sub.T
    adjacency.flags.writeable = False
    vertices.flags.writeable = False
    return NcGraph(vertices=vertices, adjacency=adjacency, source=G, restriction=restriction)


def max_clique(graph: NcGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> CliqueResult:
    """Exact maximum clique via branch and bound with greedy coloring bounds."""
    nv = graph.vertex_count
    if nv == 0:
        return CliqueResult(size=0, witness=(), complete=True, nodes=0)

    degrees = graph.adjacency.sum(axis=1)
    # deterministic vertex order: descending degree, ties by element index
    order = sorted(range(nv), key=lambda i: (-int(degrees[i]), int(graph.vertices[i])))
    pos = {v: k for k, v in enumerate(order)}
    adj_bits = [0] * nv
    for i in range(nv):
        bits = 0
        for j in np.flatnonzero(graph.adjacency[order[i]]):
            bits |= 1 << pos[int(j)]
        adj_bits[i] = bits

    best: list[int] = []
    state = {"nodes": 0}

    class OutOfBudget(Exception):
        pass

    def color_sort(cand: int) -> list[tuple[int, int]]:
        """Greedy coloring in the fixed vertex order; returns (vertex, color)
        with colors ascending.  Same-colored vertices are pairwise
        non-adjacent, so |clique| + color bounds any extension."""
        out = []
        color = 0
        remaining = cand
        while remaining:
            color += 1
            pool = remaining
            while pool:
                v = (pool & -pool).bit_length() - 1
                out.append((v, color))
                remaining &= ~(1 << v)
                pool &= ~adj_bits[v] & ~(1 << v)
        return out

    def expand(clique: list[int], cand: int):
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise OutOfBudget
        colored = color_sort(cand)
        for v, color in reversed(colored):
            if len(clique) + color <= len(best):
                return
            clique.append(v)
            nxt = cand & adj_bits[v]
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best[:] = clique
            clique.pop()
            cand &= ~(1 << v)

    complete = True
    try:
        expand([], (1 << nv) - 1)
    except OutOfBudget:
        complete = False

    witness = tuple(sorted(int(graph.vertices[order[v]]) for v in best))
    _verify_clique(graph.source, witness)
    return CliqueResult(size=len(best), witness=witness, complete=complete, nodes=state["nodes"])


def _verify_clique(G: GroupTable, elems: tuple[int, ...]):
    for i, a in enumerate(elems):
        for b in elems[i + 1:]:
            if G.mult[a, b] == G.mult[b, a]:
                raise SchurlabError(f"clique witness contains a commuting pair ({a}, {b})")
