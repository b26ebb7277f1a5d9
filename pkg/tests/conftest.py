import pytest

from realpv import DiffTower, LinearODE, build_pv


@pytest.fixture(scope="session")
def base():
    return DiffTower(base_var="t")


@pytest.fixture(scope="session")
def circle_pv(base):
    return build_pv(base, LinearODE.from_texts(base, ["1", "0"]), "CIRCLE")


@pytest.fixture(scope="session")
def circle2_pv(base):
    return build_pv(base, LinearODE.from_texts(base, ["4", "0"]), "CIRCLE")


@pytest.fixture(scope="session")
def exp_pv(base):
    return build_pv(base, LinearODE.from_texts(base, ["-1"]), "EXP")


@pytest.fixture(scope="session")
def sqrt_pv(base):
    return build_pv(base, LinearODE.from_texts(base, ["-1/2 * 1/t"]), "RADICAL")


@pytest.fixture(scope="session")
def circle(circle_pv):
    return circle_pv.extension


@pytest.fixture(scope="session")
def exp_tower(exp_pv):
    return exp_pv.extension
