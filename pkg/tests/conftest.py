import pytest

from siegelperiods.jacobi import cusp_basis
from siegelperiods.qexp import cusp_eigenform
from siegelperiods.siegel import sk_lift


@pytest.fixture(scope="session")
def phi10():
    return cusp_basis(10, 200)[0]


@pytest.fixture(scope="session")
def phi12():
    return cusp_basis(12, 200)[0]


@pytest.fixture(scope="session")
def lift10(phi10):
    return sk_lift(phi10, 200)


@pytest.fixture(scope="session")
def lift12(phi12):
    return sk_lift(phi12, 200)


@pytest.fixture(scope="session")
def g18():
    return cusp_eigenform(18, 80)


@pytest.fixture(scope="session")
def g22():
    return cusp_eigenform(22, 80)
