import pytest

from w2345.walgebra import Session


@pytest.fixture(scope="session")
def gses():
    """Shared generic-level session; caches the product table, normal-form
    bases and null fields across the whole test run."""
    return Session()


@pytest.fixture(scope="session")
def ses3():
    return Session(3)


@pytest.fixture(scope="session")
def ses5():
    return Session(5)


@pytest.fixture(scope="session")
def ses6():
    return Session(6)


@pytest.fixture(scope="session")
def ses7():
    """Cross-validation level: all reference denominators are nonzero here."""
    return Session(7)
