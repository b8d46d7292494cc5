"""
The group families behind the equality cases
============================================

Heisenberg groups over Z/q and their central products are the model groups
for equality in the central-quotient bound |G/Z| <= |gamma_2|^d.  This walk
builds each family and prints the invariants that make them special.
"""

from schurlab import (
    abelian_invariants,
    center,
    central_product,
    closure,
    commutator_subgroup,
    dihedral,
    exponent,
    extraspecial,
    heisenberg,
    min_gen_size,
    quaternion,
    quotient,
    y_group,
)


def profile(name, G):
    z = center(G)
    gamma = commutator_subgroup(G).subgroup
    d = min_gen_size(G)
    print(f"{name:>22}: |G|={G.order:<5} |Z|={z.size:<3} |gamma2|={gamma.size:<3} "
          f"d={d}  Z==gamma2: {z.same_as(gamma)}")


print("order-p^3 building blocks:")
profile("D8", dihedral(8))
profile("Q8", quaternion(8))
for q in (2, 3, 4, 5):
    profile(f"heisenberg({q})", heisenberg(q))

print("\nheisenberg(q) has center = commutator subgroup, cyclic of order q;")
h4 = heisenberg(4)
print("heisenberg(4) central quotient decomposes as",
      abelian_invariants(quotient(h4, center(h4)).quotient).factors)
print("and the exponent of the whole group is",
      exponent(closure(h4, list(range(h4.order)))))

print("\ncentral products amalgamate the centers: |Y| = q^(2m+1)")
for m, q in ((1, 2), (2, 2), (2, 3)):
    profile(f"y_group({m},{q})", y_group(m, q))

print("\nextraspecial groups are the q = p case:")
profile("extraspecial(2,2,DD)", extraspecial(2, 2, "DD"))
profile("extraspecial(2,2,DQ)", extraspecial(2, 2, "DQ"))
profile("extraspecial(3,2)", extraspecial(3, 2, "exponent-p"))

print("\na hand-rolled central product D8 *_Z Q8 (amalgamated at the centers):")
profile("D8 * Q8", central_product([dihedral(8), quaternion(8)], [2, 2]))
