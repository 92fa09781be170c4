import pytest

from quadricpoints import FieldCtx


@pytest.fixture(scope="session")
def F3():
    return FieldCtx(3)


@pytest.fixture(scope="session")
def F5():
    return FieldCtx(5)


@pytest.fixture(scope="session")
def F9():
    return FieldCtx(3, 2)
