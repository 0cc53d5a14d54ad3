"""Shared fixtures: the four separating complexes and small instance pools."""

import pytest

from quasimat.complexes import uniform_matroid

from helpers import complex_of


@pytest.fixture(scope="session")
def psi1():
    return complex_of(4, [(1, 2), (1, 3), (1, 4), (3, 4)])


@pytest.fixture(scope="session")
def psi2():
    return complex_of(4, [(1, 4), (2, 4), (2, 3), (3, 4)])


@pytest.fixture(scope="session")
def psi3():
    return complex_of(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture(scope="session")
def psi4():
    return complex_of(5, [(1, 3), (1, 4), (2, 3), (2, 4), (2, 5)])


@pytest.fixture(scope="session")
def u24():
    return uniform_matroid(2, 4)


@pytest.fixture(scope="session")
def path_complex():
    return complex_of(4, [(1, 2), (1, 3), (2, 4)])


@pytest.fixture(scope="session")
def universe():
    """All pure complexes on ground sets of size 1..5, up to relabeling."""
    from quasimat.oracle import enumerate_all_pure_complexes

    out = []
    for n in range(1, 6):
        out.extend(enumerate_all_pure_complexes(n))
    return out
