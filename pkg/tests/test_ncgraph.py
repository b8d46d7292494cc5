"""Non-commuting graphs and the exact clique solver, checked against
exhaustive enumeration."""

import numpy as np
import pytest

import oracles
from schurlab import core, families, ncgraph


def test_abelian_graph_is_empty():
    g = ncgraph.build_graph(families.abelian([4, 2]))
    assert g.vertex_count == 0
    res = ncgraph.max_clique(g)
    assert res.size == 0 and res.witness == () and res.complete


def test_vertices_exclude_center(s3, d8):
    gr = ncgraph.build_graph(s3)
    assert gr.vertex_count == 5
    gr8 = ncgraph.build_graph(d8)
    assert gr8.vertex_count == 6
    assert not any(core.center(d8).members[v] for v in gr8.vertices)


def test_edges_match_commutation(s3):
    gr = ncgraph.build_graph(s3)
    for i, u in enumerate(gr.vertices):
        assert not gr.adjacency[i, i]
        for j, v in enumerate(gr.vertices):
            expected = not oracles.commutes(s3, int(u), int(v)) if i != j else False
            assert bool(gr.adjacency[i, j]) == expected
            assert gr.adjacency[i, j] == gr.adjacency[j, i]


def test_clique_matches_oracle(s3, d8, q8, a4):
    for g in (s3, d8, q8, a4, families.dihedral(12), families.heisenberg(2)):
        gr = ncgraph.build_graph(g)
        res = ncgraph.max_clique(gr)
        assert res.complete
        oracle = oracles.max_clique_by_enumeration(g, gr.vertices.tolist())
        assert res.size == oracle
        # the witness really is pairwise non-commuting
        for i, a in enumerate(res.witness):
            for b in res.witness[i + 1:]:
                assert not oracles.commutes(g, a, b)


def test_restricted_graph(d8, s4):
    full = ncgraph.build_graph(d8)
    z2 = core.second_center(d8)
    restricted = ncgraph.build_graph(d8, z2)
    # Z2(D8) = D8, so the restriction changes nothing
    assert restricted.vertex_count == full.vertex_count
    # Z2(S4) is trivial: restricted graph is empty
    s4_restricted = ncgraph.build_graph(s4, core.second_center(s4))
    assert s4_restricted.vertex_count == 0
    assert ncgraph.max_clique(s4_restricted).size == 0


def test_restricted_clique_bounded_by_full():
    for g in (families.dihedral(16), families.direct_product(families.cyclic(2), families.dihedral(8))):
        full = ncgraph.max_clique(ncgraph.build_graph(g)).size
        restr = ncgraph.max_clique(ncgraph.build_graph(g, core.second_center(g))).size
        assert restr <= full


def test_clique_number_is_isomorphism_invariant():
    # same group from different generator orderings
    a = core.from_perms([core.Perm.from_cycles("(1 2 3 4)"), core.Perm.from_cycles("(1 3)", 4)])
    b = core.from_perms([core.Perm.from_cycles("(1 3)", 4), core.Perm.from_cycles("(1 2 3 4)")])
    ka = ncgraph.max_clique(ncgraph.build_graph(a)).size
    kb = ncgraph.max_clique(ncgraph.build_graph(b)).size
    assert ka == kb


def test_budget_returns_best_so_far(a4):
    gr = ncgraph.build_graph(a4)
    res = ncgraph.max_clique(gr, node_budget=2)
    assert not res.complete
    exact = ncgraph.max_clique(gr)
    assert res.size <= exact.size
    for i, x in enumerate(res.witness):
        for y in res.witness[i + 1:]:
            assert not oracles.commutes(a4, x, y)


def test_edge_export_order(s3):
    gr = ncgraph.build_graph(s3)
    edges = gr.edges()
    assert edges == sorted(edges)
    assert len(edges) == gr.edge_count()
