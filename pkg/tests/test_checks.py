"""Theorem checkers: exact values on the worked examples plus totality sweeps."""

import math

import mpmath
import pytest

from schurlab import checks, core, families
from schurlab.checks import BUDGET_EXCEEDED, FAIL, INAPPLICABLE, PASS
from schurlab.errors import NotGenerating


def test_ceil_power_bound_values():
    assert checks.ceil_power_bound(1) == 1
    assert checks.ceil_power_bound(2) == 4            # 2^(2*1*1)
    assert checks.ceil_power_bound(4) == 256          # 2^(2*2*2)
    assert checks.ceil_power_bound(3) == 33           # ceil(3^(2 log2 3))
    # against a high-precision recomputation with extra digits
    for n in (3, 5, 6, 7, 12, 100):
        with mpmath.workdps(80):
            exact = mpmath.mpf(n) ** (2 * mpmath.log(n, 2))
            got = checks.ceil_power_bound(n)
            assert got >= exact
            assert got - exact < 1


# -- Theorem A ----------------------------------------------------------


def test_thm_a_abelian_is_empty_product():
    v = checks.thm_a_bound(families.abelian([2, 3, 5]))
    assert v.status == PASS and v.lhs == 1 and v.rhs == 1 and v.witnesses == ()


def test_thm_a_d8_exact(d8):
    v = checks.thm_a_bound(d8)
    assert v.status == PASS
    assert v.lhs == 4 and v.rhs == 4  # 2 * 2


def test_thm_a_s3_exact(s3):
    v = checks.thm_a_bound(s3)
    assert v.status == PASS
    assert v.lhs == 6 and v.rhs == 6  # 2 * 3


def test_thm_a_explicit_lifts(s3):
    # (1 2 3) is element 2, (1 2) is element 1 in BFS numbering
    v = checks.thm_a_bound(s3, lift_choice=[2, 1])
    assert v.status == PASS and v.rhs == 6
    with pytest.raises(NotGenerating):
        checks.thm_a_bound(s3, lift_choice=[2])  # a 3-cycle alone is not enough


def test_thm_a_mechanism_holds_elsewhere(s4, a4, q8):
    for g in (s4, a4, q8, families.dihedral(20), families.heisenberg(3)):
        v = checks.thm_a_bound(g)
        assert v.status == PASS
        assert v.lhs <= v.rhs


# -- Eq. (1) -------------------------------------------------------------


def test_eq1_abelian_equality():
    for g in (families.cyclic(7), families.abelian([2, 4]), families.abelian([3, 3])):
        v = checks.eq1_check(g)
        assert v.status == PASS and checks.is_equality_case(v)
        assert v.lhs == v.rhs == 1


def test_eq1_d8_equality(d8):
    v = checks.eq1_check(d8)
    assert v.status == PASS and v.lhs == 4 and v.rhs == 4
    assert "equality" in v.notes and "d=2" in v.notes


def test_eq1_s3_strict(s3):
    v = checks.eq1_check(s3)
    assert v.status == PASS and v.lhs == 6 and v.rhs == 9
    assert "strict" in v.notes


def test_eq1_never_fails_on_valid_groups(s4, a4):
    zoo = [s4, a4, families.dihedral(24), families.quaternion(16),
           families.heisenberg(4), families.y_group(2, 2),
           families.direct_product(families.dihedral(8), families.heisenberg(3))]
    for g in zoo:
        assert checks.eq1_check(g).status == PASS


def test_eq1_sylow_product_equality():
    # class-2 nilpotent equality case that is not a p-group
    g = families.direct_product(families.dihedral(8), families.heisenberg(3))
    v = checks.eq1_check(g)
    assert checks.is_equality_case(v)
    assert v.lhs == 36 and "d=2" in v.notes


# -- Lemma 3.1 -----------------------------------------------------------


def test_lemma31_abelian_trivial():
    v = checks.lemma31_check(families.abelian([4, 2]))
    assert v.status == PASS and v.lhs == 1 and v.rhs == 1


def test_lemma31_d8(d8):
    v = checks.lemma31_check(d8)
    assert v.status == PASS
    assert v.lhs == 4 and v.rhs == 4
    assert "basis orders [2, 2]" in v.notes


def test_lemma31_heisenberg4():
    v = checks.lemma31_check(families.heisenberg(4))
    assert v.status == PASS and v.lhs == 16 and v.rhs == 16


def test_lemma31_everywhere(s3, s4, a4, q8):
    for g in (s3, s4, a4, q8, families.dihedral(16), families.y_group(2, 2),
              families.heisenberg(5), families.direct_product(families.cyclic(3), families.dihedral(8))):
        assert checks.lemma31_check(g).status == PASS


# -- Theorem 3.2 and Podoski-Szegedy -------------------------------------


def test_thm32_abelian(d8):
    v = checks.thm32_bound(families.cyclic(9))
    assert v.status == PASS and v.lhs == 1 and v.rhs == 1


def test_thm32_d8(d8):
    # gamma2 <= Z makes n = 1; the bound reduces to the exponent product 4
    v = checks.thm32_bound(d8)
    assert v.status == PASS and v.lhs == 4 and v.rhs == 4
    assert "n=1" in v.notes


def test_thm32_s3(s3):
    v = checks.thm32_bound(s3)
    assert v.status == PASS and v.lhs == 6
    assert v.rhs == 33  # ceil(3^(2 log2 3)) * empty exponent product
    assert "n=3" in v.notes


def test_ps_class2_trivial(d8, q8):
    for g in (d8, q8, families.heisenberg(3)):
        v = checks.podoski_szegedy(g)
        assert v.status == PASS and v.lhs == 1


def test_ps_s3_s4(s3, s4):
    v = checks.podoski_szegedy(s3)
    assert v.status == PASS and v.lhs == 6 and v.rhs == 33
    v = checks.podoski_szegedy(s4)
    assert v.status == PASS and v.lhs == 24
    assert v.rhs == checks.ceil_power_bound(12)


def test_thm32_ps_everywhere(s3, s4, a4):
    for g in (s3, s4, a4, families.dihedral(28), families.quaternion(24),
              families.y_group(2, 3)):
        assert checks.thm32_bound(g).status == PASS
        assert checks.podoski_szegedy(g).status == PASS


# -- HKL strict bound ----------------------------------------------------


def test_hkl_gates(d8):
    assert checks.hkl_check(families.abelian([2, 2])).status == INAPPLICABLE
    assert checks.hkl_check(d8).status == INAPPLICABLE  # Frattini is nontrivial


def test_hkl_s3(s3):
    v = checks.hkl_check(s3)
    assert v.status == PASS and v.lhs == 6 and v.rhs == 9


def test_hkl_applicable_zoo(s4, a4):
    for g in (s4, a4, families.dihedral(6), families.dihedral(12),
              families.direct_product(families.cyclic(5), families.dihedral(6))):
        v = checks.hkl_check(g)
        if v.status == PASS:
            assert v.lhs < v.rhs
        else:
            assert v.status == INAPPLICABLE


# -- Proposition 3.4 -----------------------------------------------------


def test_prop34_d8_q8(d8, q8):
    for g in (d8, q8):
        v = checks.prop34_check(g)
        assert v.status == PASS
        assert "iv:d-even=yes" in v.notes
        assert "d=2" in " ".join(v.witnesses)


def test_prop34_heisenberg4():
    v = checks.prop34_check(families.heisenberg(4))
    assert v.status == PASS
    assert "H/Z invariants [4, 4]" in " ".join(v.witnesses)


def test_prop34_inapplicable(s3):
    assert checks.prop34_check(s3).status == INAPPLICABLE          # not a p-group
    assert checks.prop34_check(families.cyclic(8)).status == INAPPLICABLE  # abelian
    # class-2 p-group with Z strictly above gamma2: C2 x D8
    g = families.direct_product(families.cyclic(2), families.dihedral(8))
    v = checks.prop34_check(g)
    assert v.status == INAPPLICABLE


def test_prop34_applicable_zoo():
    for g in (families.extraspecial(2, 2, "DD"), families.extraspecial(2, 2, "DQ"),
              families.extraspecial(3, 2, "exponent-p"), families.y_group(2, 3),
              families.heisenberg(3), families.extraspecial(3, 1, "exponent-p2")):
        v = checks.prop34_check(g)
        assert v.status == PASS, (g.order, v.notes)


# -- Theorem 3.6 ---------------------------------------------------------


def test_thm36_d8_q8(d8, q8):
    for g in (d8, q8):
        v = checks.thm36_check(g)
        assert v.status == PASS
        assert "m=1" in v.witnesses and "q=2" in v.witnesses


def test_thm36_extraspecial_32():
    v = checks.thm36_check(families.extraspecial(3, 2, "exponent-p"))
    assert v.status == PASS
    assert "m=2" in v.witnesses and "q=3" in v.witnesses


def test_thm36_inapplicable(s3, s4):
    assert checks.thm36_check(s3).status == INAPPLICABLE
    assert checks.thm36_check(families.cyclic(4)).status == INAPPLICABLE
    assert checks.thm36_check(s4).status == INAPPLICABLE


def test_thm36_applies_beyond_stem_groups():
    # Z strictly above gamma2, still class-2 equality: C3 x heisenberg(3)
    g = families.direct_product(families.cyclic(3), families.heisenberg(3))
    v = checks.thm36_check(g)
    assert v.status == PASS
    assert "m=1" in v.witnesses and "q=3" in v.witnesses


# -- stem search ---------------------------------------------------------


def test_stem_search_abelian():
    v = checks.stem_search(families.abelian([2, 6]), [])
    assert v.status == PASS and v.witnesses == ("trivial group",)


def test_stem_search_already_stem(d8):
    v = checks.stem_search(d8, [])
    assert v.status == PASS and v.witnesses == ("itself",)


def test_stem_search_finds_catalog_witness(d8):
    g = families.direct_product(families.cyclic(3), families.dihedral(8))
    v = checks.stem_search(g, [("Q8", families.quaternion(8)), ("D8", d8)])
    assert v.status == PASS
    assert v.witnesses[0] in ("D8", "Q8")  # both are stem and isoclinic to G


def test_stem_search_heisenberg_is_its_own_witness():
    v = checks.stem_search(families.heisenberg(3), [])
    assert v.status == PASS and v.witnesses == ("itself",)


def test_stem_search_library_candidates():
    # empty user catalog: the class-2 invariants of C3 x D8 point at the
    # order-8 Heisenberg central product, which is stem and isoclinic
    g = families.direct_product(families.cyclic(3), families.dihedral(8))
    v = checks.stem_search(g, [])
    assert v.status == PASS
    assert v.witnesses == ("y_group(1,2)",)


def test_stem_search_not_found_is_inapplicable(s3):
    # a non-nilpotent, non-stem group with no usable candidates
    g = families.direct_product(families.cyclic(4), s3)
    v = checks.stem_search(g, [("C6", families.cyclic(6))])
    assert v.status == INAPPLICABLE
    assert "not refuted" in v.notes


# -- totality ------------------------------------------------------------


def test_checkers_are_total_on_a_zoo(s3, s4, a4, d8, q8):
    zoo = [families.cyclic(1), families.cyclic(2), s3, s4, a4, d8, q8,
           families.dihedral(10), families.heisenberg(2), families.abelian([2, 2, 2, 2]),
           families.y_group(2, 2)]
    runners = [checks.thm_a_bound, checks.eq1_check, checks.lemma31_check,
               checks.thm32_bound, checks.podoski_szegedy, checks.hkl_check,
               checks.prop34_check, checks.thm36_check]
    for g in zoo:
        for run in runners:
            v = run(g)
            assert v.status in (PASS, FAIL, INAPPLICABLE, BUDGET_EXCEEDED)
            assert v.status != FAIL  # all of these are theorems
