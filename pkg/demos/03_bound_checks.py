"""
Verifying the central-quotient bounds on concrete groups
========================================================

Each checker returns a structured verdict with the exact integers on both
sides of its inequality, witnesses, and a pass / fail / inapplicable status.
"""

from schurlab import (
    Perm,
    dihedral,
    eq1_check,
    from_perms,
    heisenberg,
    hkl_check,
    lemma31_check,
    podoski_szegedy,
    quaternion,
    thm32_bound,
    thm_a_bound,
)


def show(verdict):
    nums = "" if verdict.lhs is None else f"  {verdict.lhs} vs {verdict.rhs}"
    wit = f"  [{', '.join(verdict.witnesses)}]" if verdict.witnesses else ""
    print(f"  {verdict.check_id:<8} {verdict.status:<13}{nums}  ({verdict.notes}){wit}")


s3 = from_perms([Perm.from_cycles("(1 2)", 3), Perm.from_cycles("(1 2 3)", 3)])
s4 = from_perms([Perm.from_cycles("(1 2)", 4), Perm.from_cycles("(1 2 3 4)", 4)])

for name, G in (("S3", s3), ("S4", s4), ("D8", dihedral(8)),
                ("Q8", quaternion(8)), ("heisenberg(3)", heisenberg(3))):
    print(f"{name}:")
    # |G/Z| <= product of class sizes of quotient generators, with the
    # mechanism Z(G) = intersection of their centralizers verified inside
    show(thm_a_bound(G))
    # |G/Z| <= |gamma_2|^d; the spread between the two sides is what the
    # equality search hunts for
    show(eq1_check(G))
    # |Z2/Z| = product of exponents of [x_i, G] over an invariant-factor basis
    show(lemma31_check(G))
    # |G/Z| <= n^(2 log2 n) * exponent product, n = |gamma_2 Z / Z|
    show(thm32_bound(G))
    # |G/Z2| <= n^(2 log2 n), n = |gamma_2 / (gamma_2 meet Z)|
    show(podoski_szegedy(G))
    # strict bound |G/Z| < |gamma_2|^2 for Frattini-trivial non-abelian groups
    show(hkl_check(G))
    print()
