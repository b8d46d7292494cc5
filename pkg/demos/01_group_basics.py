"""
Building finite groups and reading off their structure
=======================================================

Groups enter as permutation generators or explicit multiplication tables and
become dense Cayley tables; every structural feature is an exact set
computation over element indices.
"""

from schurlab import (
    Perm,
    center,
    commutator_set,
    commutator_subgroup,
    conjugacy_classes,
    from_perms,
    min_generating_set,
    nilpotency_class,
    quotient,
    upper_central_series,
)

# the symmetric group on 3 points, from two generators
s3 = from_perms([Perm.from_cycles("(1 2)", 3), Perm.from_cycles("(1 2 3)", 3)])
print(f"S3 has order {s3.order}; elements are labeled by cycle strings:")
print("  ", ", ".join(s3.labels))

z = center(s3)
print(f"\nits center is trivial: {z.label_list()}")

classes = conjugacy_classes(s3)
print("conjugacy classes:", [(s3.label(c.rep), c.size) for c in classes])

gamma = commutator_subgroup(s3)
print(f"commutator subgroup has order {gamma.subgroup.size}: {gamma.subgroup.label_list()}")
print("raw commutator set already equals it here:",
      int(gamma.commutators.sum()) == gamma.subgroup.size)

# the set [x, G] for a transposition has the size of its conjugacy class
x = 1
print(f"\n[{s3.label(x)}, G] =", [s3.label(int(v)) for v in commutator_set(s3, x)])

# dihedral group of order 16 is nilpotent of class 3
d16 = from_perms([
    Perm.from_cycles("(1 2 3 4 5 6 7 8)"),
    Perm.from_cycles("(2 8)(3 7)(4 6)", 8),
])
series = upper_central_series(d16)
print(f"\nD16 upper central series sizes: {[m.size for m in series]}")
print("nilpotency class:", nilpotency_class(d16))
print("minimal generating set:", [d16.label(g) for g in min_generating_set(d16)])

# central quotients are groups in their own right
q = quotient(d16, center(d16))
print(f"D16 / Z has order {q.quotient.order} and class {nilpotency_class(q.quotient)}")
