import pytest

from ffkit import check_prime, construct_field


@pytest.fixture(scope="session")
def Z2():
    return check_prime(2)


@pytest.fixture(scope="session")
def Z3():
    return check_prime(3)


@pytest.fixture(scope="session")
def F4():
    return construct_field(2, 2)


@pytest.fixture(scope="session")
def F8():
    return construct_field(2, 3)


@pytest.fixture(scope="session")
def F8p():
    return construct_field(2, 3, "w^3+w^2+1", variable="w")


@pytest.fixture(scope="session")
def F9():
    return construct_field(3, 2)


@pytest.fixture(scope="session")
def F7():
    return construct_field(7, 1)
