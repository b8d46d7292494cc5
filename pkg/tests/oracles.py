"""Brute-force-by-definition oracle implementations.

Everything here works straight from the multiplication table with naive
scans and set arithmetic, deliberately sharing no code with the library's
optimized paths, so the two can cross-check each other on small groups.
"""

from __future__ import annotations

import itertools
import math


def mul(G, a, b):
    return int(G.mult[a, b])


def inv(G, a):
    return int(G.inverse[a])


def commutes(G, a, b):
    return mul(G, a, b) == mul(G, b, a)


def center(G) -> set[int]:
    return {x for x in range(G.order) if all(commutes(G, x, g) for g in range(G.order))}


def centralizer_of_element(G, x) -> set[int]:
    return {g for g in range(G.order) if commutes(G, g, x)}


def commutator(G, x, y):
    return mul(G, mul(G, inv(G, x), inv(G, y)), mul(G, x, y))


def naive_closure(G, seed) -> set[int]:
    out = set(seed) | {G.identity}
    while True:
        new = {mul(G, a, b) for a in out for b in out} | out
        if len(new) == len(out):
            return out
        out = new


def commutator_subgroup(G) -> set[int]:
    k = {commutator(G, x, y) for x in range(G.order) for y in range(G.order)}
    return naive_closure(G, k)


def commutator_set(G, x) -> set[int]:
    return {commutator(G, x, g) for g in range(G.order)}


def conjugacy_classes(G) -> list[set[int]]:
    seen = set()
    classes = []
    for x in range(G.order):
        if x in seen:
            continue
        cls = {mul(G, mul(G, g, x), inv(G, g)) for g in range(G.order)}
        classes.append(cls)
        seen |= cls
    return classes


def second_center(G) -> set[int]:
    z = center(G)
    return {x for x in range(G.order) if all(commutator(G, x, g) in z for g in range(G.order))}


def upper_central_series(G) -> list[set[int]]:
    terms = [center(G)]
    while True:
        z = terms[-1]
        nxt = {x for x in range(G.order) if all(commutator(G, x, g) in z for g in range(G.order))}
        if nxt == z:
            break
        terms.append(nxt)
    return terms


def element_order(G, x) -> int:
    k = 1
    cur = x
    while cur != G.identity:
        cur = mul(G, cur, x)
        k += 1
    return k


def exponent(G, members) -> int:
    return math.lcm(*[element_order(G, x) for x in members])


def all_subgroups(G) -> list[frozenset[int]]:
    """Closures of all generator subsets of size <= log2 |G| (every subgroup
    has a generating set that small, by the doubling chain argument)."""
    max_gens = max(1, G.order.bit_length() - 1)
    found = {frozenset({G.identity})}
    elems = [x for x in range(G.order) if x != G.identity]
    for size in range(1, max_gens + 1):
        for combo in itertools.combinations(elems, size):
            found.add(frozenset(naive_closure(G, combo)))
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def maximal_subgroups(G) -> list[frozenset[int]]:
    subs = [s for s in all_subgroups(G) if len(s) < G.order]
    out = []
    for s in subs:
        if not any(s < t for t in subs):
            out.append(s)
    return out


def frattini(G) -> set[int]:
    maxes = maximal_subgroups(G)
    if not maxes:
        return set(range(G.order))
    out = set(range(G.order))
    for m in maxes:
        out &= m
    return out


def min_gen_size(G) -> int:
    if G.order == 1:
        return 0
    elems = [x for x in range(G.order) if x != G.identity]
    for size in range(1, G.order + 1):
        for combo in itertools.combinations(elems, size):
            if len(naive_closure(G, combo)) == G.order:
                return size
    raise AssertionError("unreachable: the whole group always generates itself")


def max_clique_by_enumeration(G, vertices) -> int:
    """Exact clique number of the non-commuting graph on the given vertices."""
    verts = list(vertices)
    for size in range(len(verts), 0, -1):
        for combo in itertools.combinations(verts, size):
            if all(not commutes(G, a, b) for a, b in itertools.combinations(combo, 2)):
                return size
    return 0


def abelian_element_order_multiset(factors) -> list[int]:
    """Element orders of C_{f1} x ... x C_{fk}, for cross-checking invariant factors."""
    orders = []
    for combo in itertools.product(*[range(f) for f in factors]):
        orders.append(math.lcm(*[f // math.gcd(f, c) if c else 1 for f, c in zip(factors, combo)]))
    return sorted(orders)
