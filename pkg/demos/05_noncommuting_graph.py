"""
Non-commuting graphs and exact clique numbers
=============================================

Vertices are non-central elements, edges join non-commuting pairs.  Cliques
are sets of pairwise non-commuting elements; their finiteness characterizes
finite central quotients, and the solver here computes exact clique numbers
at desk scale.
"""

from schurlab import (
    Perm,
    abelian,
    build_graph,
    dihedral,
    from_perms,
    max_clique,
    second_center,
)

s3 = from_perms([Perm.from_cycles("(1 2)", 3), Perm.from_cycles("(1 2 3)", 3)])
graph = build_graph(s3)
print(f"Gamma(S3): {graph.vertex_count} vertices, {graph.edge_count()} edges")
print("edges:", [(s3.label(u), s3.label(v)) for u, v in graph.edges()])

result = max_clique(graph)
print(f"clique number {result.size}, witness {[s3.label(v) for v in result.witness]}")
print("(all three transpositions plus one 3-cycle pairwise refuse to commute)")

print("\nabelian groups give the empty graph:")
print("  Gamma(C4 x C2) vertices:", build_graph(abelian([4, 2])).vertex_count)

d16 = dihedral(16)
full = max_clique(build_graph(d16))
restricted = max_clique(build_graph(d16, second_center(d16)))
print(f"\nD16: full clique number {full.size}; restricted to the second center "
      f"{restricted.size} (restriction never increases it)")

s4 = from_perms([Perm.from_cycles("(1 2)", 4), Perm.from_cycles("(1 2 3 4)", 4)])
print(f"\nS4 second center is trivial, so the restricted graph is empty: "
      f"{build_graph(s4, second_center(s4)).vertex_count} vertices")
print(f"unrestricted Gamma(S4) clique number: {max_clique(build_graph(s4)).size}")
