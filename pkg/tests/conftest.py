import pytest

from reebsym import compute_reeb, make_fixture
from reebsym.lift import prepare_lift

_PAIRS: dict = {}
_REEB: dict = {}
_SETUPS: dict = {}


def fixture_pair(name: str):
    if name not in _PAIRS:
        _PAIRS[name] = make_fixture(name)
    return _PAIRS[name]


def fixture_reeb(name: str):
    if name not in _REEB:
        c, f = fixture_pair(name)
        _REEB[name] = compute_reeb(c, f)
    return _REEB[name]


def fixture_setup(name: str, reeb_vertex: int):
    key = (name, reeb_vertex)
    if key not in _SETUPS:
        c, f = fixture_pair(name)
        _SETUPS[key] = prepare_lift(c, f, reeb_vertex,
                                    precomputed=fixture_reeb(name))
    return _SETUPS[key]


@pytest.fixture(scope="session")
def fx():
    return fixture_pair


@pytest.fixture(scope="session")
def fx_reeb():
    return fixture_reeb


@pytest.fixture(scope="session")
def fx_setup():
    return fixture_setup
