"""
Isoclinism: the equivalence that the classification lives in
============================================================

Two groups are isoclinic when their central quotients and commutator
subgroups are isomorphic compatibly with the commutator pairing.  The search
produces explicit witnesses (phi, theta); fingerprints refute most
non-isoclinic pairs instantly.
"""

from schurlab import (
    are_isoclinic,
    commutator_pairing,
    cyclic,
    dihedral,
    direct_product,
    extraspecial,
    heisenberg,
    invariant_fingerprint,
    quaternion,
    thm36_check,
    verify_witness,
    y_group,
)

d8, q8 = dihedral(8), quaternion(8)

print("the commutator pairing of D8 over its central quotient (C2 x C2):")
pairing = commutator_pairing(d8)
for row in pairing.pairing:
    print("  ", " ".join(d8.label(int(v)) for v in row))

print("\nD8 vs Q8: same pairing up to relabeling, hence isoclinic")
result = are_isoclinic(d8, q8)
print("  status:", result.status, "| nodes searched:", result.nodes)
print("  phi:", result.witness.phi.tolist())
print("  theta:", dict(zip(result.witness.theta_domain.tolist(),
                           result.witness.theta_image.tolist())))
print("  witness re-verified:", verify_witness(d8, q8, result.witness))

print("\nabelian direct factors vanish under isoclinism:")
h3 = heisenberg(3)
padded = direct_product(cyclic(9), h3)
print(f"  heisenberg(3) ~ C9 x heisenberg(3):", are_isoclinic(h3, padded).status)

print("\nfingerprints refute non-isoclinic pairs without any search:")
bad = are_isoclinic(d8, cyclic(8))
print("  D8 vs C8:", bad.status, "-", bad.reason)

print("\nthe classification: class-2 p-groups with equality are isoclinic to")
print("central products of Heisenberg groups:")
for name, G in (("extraspecial(3,2)", extraspecial(3, 2, "exponent-p")),
                ("y_group(2,2)", y_group(2, 2)),
                ("heisenberg(4)", heisenberg(4))):
    verdict = thm36_check(G)
    print(f"  {name:>18}: {verdict.status} ({verdict.notes})")
