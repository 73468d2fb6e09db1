import json
import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def load_fixture(name: str) -> dict:
    return json.loads((FIXTURES / name).read_text())


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


@pytest.fixture
def triple_cusp_graph():
    from topzeta.resolution import graph_from_json
    return graph_from_json(load_fixture("triple_cusp_graph.json"))


@pytest.fixture
def two_cusp_graph():
    from topzeta.resolution import graph_from_json
    return graph_from_json(load_fixture("two_cusp_graph.json"))


@pytest.fixture
def a3_graph():
    from topzeta.resolution import graph_from_json
    return graph_from_json(load_fixture("a3_graph.json"))


@pytest.fixture
def cusp_graph():
    from topzeta.resolution import graph_from_json
    return graph_from_json(load_fixture("cusp_graph.json"))


@pytest.fixture
def x5y6_profile():
    from topzeta.suspension import profile_from_json
    return profile_from_json(load_fixture("x5y6_profile.json"))
