"""Construction invariants for the group families."""

import math

import numpy as np
import pytest

import oracles
from schurlab import core, families, isomorphism
from schurlab.errors import (
    BadVariant,
    CapExceeded,
    NotCentral,
    NotPrimePower,
    OrderMismatch,
    SchurlabError,
)


def test_cyclic_and_abelian_basics():
    assert families.cyclic(1).order == 1
    k4 = families.abelian([2, 2])
    assert core.commutator_subgroup(k4).subgroup.size == 1
    c24 = families.abelian([2, 4])
    assert c24.order == 8
    assert core.exponent(core.closure(c24, list(range(8)))) == 4


def test_dihedral_quaternion_invariants():
    d8 = families.dihedral(8)
    assert (core.center(d8).size, core.commutator_subgroup(d8).subgroup.size) == (2, 2)
    assert core.nilpotency_class(d8) == 2
    q8 = families.quaternion(8)
    assert (core.center(q8).size, core.commutator_subgroup(q8).subgroup.size) == (2, 2)
    # unique involution in Q8
    assert sum(1 for o in core.element_orders(q8) if o == 2) == 1
    d6 = families.dihedral(6)
    assert core.center(d6).size == 1


def test_dihedral_is_s3_at_order_6(s3):
    assert isomorphism.are_isomorphic(families.dihedral(6), s3)


def test_generalized_quaternion_q16():
    q16 = families.quaternion(16)
    assert q16.order == 16
    assert sum(1 for o in core.element_orders(q16) if o == 2) == 1
    assert core.center(q16).size == 2


def test_family_parameter_validation():
    with pytest.raises(SchurlabError):
        families.dihedral(7)
    with pytest.raises(SchurlabError):
        families.quaternion(10)  # not a multiple of 4
    with pytest.raises(NotPrimePower):
        families.heisenberg(6)
    with pytest.raises(CapExceeded):
        families.cyclic(50, cap=10)
    with pytest.raises(BadVariant):
        families.extraspecial(2, 2, "DX")
    with pytest.raises(BadVariant):
        families.extraspecial(3, 1, "weird")


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_heisenberg_invariants(q):
    g = families.heisenberg(q)
    assert g.order == q ** 3
    z = core.center(g)
    gamma = core.commutator_subgroup(g).subgroup
    assert z.size == q and gamma.size == q
    assert z.same_as(gamma)
    assert core.is_cyclic_subgroup(gamma)
    assert core.min_gen_size(g) == 2
    assert core.nilpotency_class(g) == 2
    # Phi = gamma2 * G^p coincides with the center exactly when q is prime;
    # for q = p^k with k > 1 the p-th powers push Phi strictly above Z
    phi = core.frattini(g)
    if q in (2, 3, 5):
        assert z.same_as(phi)
    else:
        assert z.issubset(phi) and phi.size > q


def test_heisenberg_2_is_dihedral():
    assert isomorphism.are_isomorphic(families.heisenberg(2), families.dihedral(8))


def test_heisenberg_3_exponent_and_quotient():
    h3 = families.heisenberg(3)
    assert core.exponent(core.closure(h3, list(range(27)))) == 3
    h4 = families.heisenberg(4)
    q = core.quotient(h4, core.center(h4))
    assert core.abelian_invariants(q.quotient).factors == (4, 4)


def test_central_product_single_factor_is_isomorphic_copy():
    d8 = families.dihedral(8)
    g = families.central_product([d8], [2])
    assert g.order == 8
    assert isomorphism.are_isomorphic(g, d8)


def test_central_product_order_formula():
    d8 = families.dihedral(8)
    g = families.central_product([d8, d8], [2, 2])
    assert g.order == 32  # q^(2m+1) with q=2, m=2
    h3 = families.heisenberg(3)
    g2 = families.central_product([h3, h3], [1, 1])
    assert g2.order == 243  # q^(2m+1) with q=3, m=2
    # three factors
    g3 = families.central_product([d8, d8, d8], [2, 2, 2])
    assert g3.order == 8 ** 3 // 2 ** 2 == 128


def test_central_product_rejects_bad_amalgams():
    d8 = families.dihedral(8)
    with pytest.raises(NotCentral):
        families.central_product([d8, d8], [1, 2])  # r is not central
    with pytest.raises(OrderMismatch):
        families.central_product([d8, families.heisenberg(3)], [2, 1])
    with pytest.raises(OrderMismatch):
        # exponent 0 is not a unit, so it is no isomorphism of the amalgam
        families.central_product([d8, d8], [2, 2], exponents=[1, 0])


def test_central_product_nondefault_identification():
    h3 = families.heisenberg(3)
    default = families.central_product([h3, h3], [1, 1])
    twisted = families.central_product([h3, h3], [1, 1], exponents=[1, 2])
    assert default.order == twisted.order == 3 ** 5
    from schurlab import isoclinism
    assert isoclinism.are_isoclinic(default, twisted, budget=10 ** 6).isoclinic


@pytest.mark.parametrize("p,m,variant", [(2, 1, "D"), (2, 2, "DD"), (2, 2, "DQ"), (3, 1, "exponent-p"), (3, 2, "exponent-p")])
def test_extraspecial_invariants(p, m, variant):
    g = families.extraspecial(p, m, variant)
    assert g.order == p ** (2 * m + 1)
    z = core.center(g)
    gamma = core.commutator_subgroup(g).subgroup
    assert z.size == p and gamma.size == p
    assert core.frattini(g).size == p
    q = core.quotient(g, z).quotient
    assert set(core.abelian_invariants(q).factors) == {p}  # elementary abelian


def test_extraspecial_m1_shortcuts():
    assert isomorphism.are_isomorphic(families.extraspecial(2, 1, "D"), families.dihedral(8))
    assert isomorphism.are_isomorphic(families.extraspecial(3, 1, "exponent-p"), families.heisenberg(3))
    assert not isomorphism.are_isomorphic(
        families.extraspecial(3, 1, "exponent-p2"), families.heisenberg(3))


def test_extraspecial_dd_vs_qq_vs_dq():
    dd = families.extraspecial(2, 2, "DD")
    qq = families.extraspecial(2, 2, "QQ")
    dq = families.extraspecial(2, 2, "DQ")
    assert isomorphism.are_isomorphic(dd, qq)
    assert not isomorphism.are_isomorphic(dd, dq)


@pytest.mark.parametrize("m,q", [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3)])
def test_y_group_invariants(m, q):
    y = families.y_group(m, q)
    assert y.order == q ** (2 * m + 1)
    z = core.center(y)
    gamma = core.commutator_subgroup(y).subgroup
    assert y.order // z.size == q ** (2 * m)
    assert gamma.size == q
    assert core.is_cyclic_subgroup(gamma)
    assert core.min_gen_size(y) == 2 * m


def test_y_group_m1_is_heisenberg():
    assert isomorphism.are_isomorphic(families.y_group(1, 3), families.heisenberg(3))


def test_direct_product_structure():
    d8 = families.dihedral(8)
    triv = families.cyclic(1)
    assert isomorphism.are_isomorphic(families.direct_product(d8, triv), d8)
    c3d8 = families.direct_product(families.cyclic(3), d8)
    assert core.center(c3d8).size == 6
    assert core.commutator_subgroup(c3d8).subgroup.size == 2


def test_direct_product_center_and_gamma2_factorize():
    a, b = families.dihedral(8), families.heisenberg(3)
    prod = families.direct_product(a, b)
    za = core.center(a).members
    zb = core.center(b).members
    expected_z = np.outer(za, zb).ravel()
    assert np.array_equal(core.center(prod).members, expected_z)
    ga = core.commutator_subgroup(a).subgroup.members
    gb = core.commutator_subgroup(b).subgroup.members
    expected_g = np.outer(ga, gb).ravel()
    assert np.array_equal(core.commutator_subgroup(prod).subgroup.members, expected_g)
    assert core.nilpotency_class(prod) == 2


def test_build_family_dispatch():
    spec = families.FamilySpec("y_group", (2, 2))
    assert families.build_family(spec).order == 32
    assert families.build_family(families.FamilySpec("abelian", (2, 3))).order == 6
    with pytest.raises(SchurlabError):
        families.build_family(families.FamilySpec("nope", ()))
