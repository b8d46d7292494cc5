"""Exact isomorphism testing between small table groups.

A generator-image backtracking search: pick a minimal generating set of the
first group, try images with matching invariants in the second, and let the
multiplication tables force the rest of the map.  Desk-scale only; used by
the catalog round-trip checks and by tests that compare construction paths.
"""

from __future__ import annotations

import numpy as np

from . import core
from .core import GroupTable


def forced_extension(mult_a: np.ndarray, mult_b: np.ndarray,
                     seed_dom: list[int], seed_img: list[int]):
    """Close a partial map multiplicatively and check it stays a function.

    Starting from the seed pairs, repeatedly multiplies all known domain
    elements pairwise and assigns the products of their images.  Returns
    ``(domain, images)`` as aligned arrays over the generated subgroup, or
    ``None`` if the same domain product ever receives two images or two
    domain elements collapse onto one image.
    """
    dom = np.array(seed_dom, dtype=np.int64)
    img = np.array(seed_img, dtype=np.int64)
    order = np.argsort(dom, kind="stable")
    dom, img = dom[order], img[order]
    dom, first = np.unique(dom, return_index=True)
    if len(np.unique(img[first])) != len(dom):
        return None
    img = img[first]
    while True:
        pa = mult_a[np.ix_(dom, dom)].ravel()
        pb = mult_b[np.ix_(img, img)].ravel()
        order = np.argsort(pa, kind="stable")
        pa, pb = pa[order], pb[order]
        uniq, starts = np.unique(pa, return_index=True)
        # within each run of equal domain products, the image must be constant
        lo = np.minimum.reduceat(pb, starts)
        hi = np.maximum.reduceat(pb, starts)
        if not np.array_equal(lo, hi):
            return None
        if len(np.unique(lo)) != len(uniq):
            return None
        if len(uniq) == len(dom):
            return dom, lo
        dom, img = uniq, lo


def _invariant_key(G: GroupTable):
    orders = tuple(sorted(int(o) for o in core.element_orders(G)))
    classes = tuple(sorted(c.size for c in core.conjugacy_classes(G)))
    return (
        G.order,
        orders,
        classes,
        core.center(G).size,
        core.commutator_subgroup(G).subgroup.size,
    )


def find_isomorphism(G: GroupTable, H: GroupTable) -> np.ndarray | None:
    """An isomorphism G -> H as an image array, or None if there is none."""
    if G.order != H.order:
        return None
    if _invariant_key(G) != _invariant_key(H):
        return None
    if core.is_abelian(G):
        if not core.is_abelian(H):
            return None
        if core.abelian_invariants(G).factors != core.abelian_invariants(H).factors:
            return None
    gens = core.min_generating_set(G)
    if not gens:
        return np.array([H.identity], dtype=np.int64) if G.order == 1 else None
    g_orders = core.element_orders(G)
    h_orders = core.element_orders(H)
    g_csize = np.array([core.class_of(G, x).size for x in range(G.order)])
    h_csize = np.array([core.class_of(H, x).size for x in range(H.order)])
    candidates = []
    for g in gens:
        ok = np.flatnonzero((h_orders == g_orders[g]) & (h_csize == g_csize[g]))
        candidates.append(ok.tolist())

    n = G.order
    def dfs(k: int, images: list[int]):
        if k == len(gens):
            ext = forced_extension(G.mult, H.mult, [G.identity] + gens, [H.identity] + images)
            if ext is None:
                return None
            dom, img = ext
            if len(dom) != n:
                return None
            full = np.empty(n, dtype=np.int64)
            full[dom] = img
            return full
        for h in candidates[k]:
            result = dfs(k + 1, images + [h])
            if result is not None:
                return result
        return None

    mapping = dfs(0, [])
    if mapping is None:
        return None
    assert _is_isomorphism(G, H, mapping)
    return mapping


def _is_isomorphism(G: GroupTable, H: GroupTable, mapping: np.ndarray) -> bool:
    if len(np.unique(mapping)) != G.order:
        return False
    return np.array_equal(mapping[G.mult], H.mult[mapping[:, None], mapping[None, :]])


def are_isomorphic(G: GroupTable, H: GroupTable) -> bool:
    return find_isomorphism(G, H) is not None
