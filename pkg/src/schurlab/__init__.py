"""schurlab: exact finite-group computations around central quotients,
commutator subgroups, isoclinism, and bound verification over group catalogs."""

from .core import (
    AbelianBasis,
    ConjClass,
    GroupTable,
    Perm,
    QuotientMap,
    SubgroupMask,
    abelian_invariants,
    center,
    centralizer,
    closure,
    commutator_set,
    commutator_subgroup,
    conjugacy_classes,
    element_orders,
    exponent,
    frattini,
    from_perms,
    is_abelian,
    maximal_subgroups,
    min_gen_size,
    min_generating_set,
    nilpotency_class,
    quotient,
    second_center,
    subgroup_table,
    upper_central_series,
)
from .families import (
    FamilySpec,
    abelian,
    build_family,
    central_product,
    cyclic,
    dihedral,
    direct_product,
    extraspecial,
    heisenberg,
    quaternion,
    y_group,
)
from .checks import (
    Verdict,
    ceil_power_bound,
    eq1_check,
    hkl_check,
    is_equality_case,
    lemma31_check,
    podoski_szegedy,
    prop34_check,
    stem_search,
    thm32_bound,
    thm36_check,
    thm_a_bound,
)
from .isoclinism import (
    CommutatorPairing,
    IsoclinismResult,
    IsoclinismWitness,
    are_isoclinic,
    commutator_pairing,
    invariant_fingerprint,
    verify_witness,
)
from .isomorphism import are_isomorphic, find_isomorphism
from .ncgraph import CliqueResult, NcGraph, build_graph, max_clique
from .catalog import (
    CatalogEntry,
    build_regression_catalog,
    load_regression_catalog,
    parse_catalog,
    parse_catalog_collecting,
    regression_groups,
)
from .reports import Report, analyze, run_checks, search_equality
from . import errors

__version__ = "0.1.0"
