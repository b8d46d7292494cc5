import pytest

from schurlab import catalog, core, families
from schurlab.core import Perm


@pytest.fixture(scope="session")
def regression_entries():
    return catalog.load_regression_catalog()


@pytest.fixture(scope="session")
def regression_map(regression_entries):
    return {e.name: e.resolved for e in regression_entries}


@pytest.fixture(scope="session")
def s3():
    return core.from_perms([Perm.from_cycles("(1 2)", 3), Perm.from_cycles("(1 2 3)", 3)])


@pytest.fixture(scope="session")
def s4():
    return core.from_perms([Perm.from_cycles("(1 2)", 4), Perm.from_cycles("(1 2 3 4)", 4)])


@pytest.fixture(scope="session")
def a4():
    return core.from_perms([Perm.from_cycles("(1 2 3)", 4), Perm.from_cycles("(1 2)(3 4)", 4)])


@pytest.fixture(scope="session")
def d8():
    return families.dihedral(8)


@pytest.fixture(scope="session")
def q8():
    return families.quaternion(8)
