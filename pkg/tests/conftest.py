from __future__ import annotations

import pytest

from surfcat import fixtures as fx
from surfcat.qp import algebra_of
from surfcat.surface import polygon


@pytest.fixture(scope="session")
def hexagon():
    return polygon(6)


@pytest.fixture(scope="session")
def hexagon_alg(hexagon):
    return algebra_of(hexagon)


@pytest.fixture(scope="session")
def annulus_fixture():
    return fx.example_annulus()


@pytest.fixture(scope="session")
def annulus_alg(annulus_fixture):
    return algebra_of(annulus_fixture)


@pytest.fixture(scope="session")
def torus_fixture():
    return fx.genus_one_torus()
