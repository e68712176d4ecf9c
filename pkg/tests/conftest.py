import json

import pytest

from toriccodes.config import reset_settings
from toriccodes.gf import make_field


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full acceptance grids, deselect with -m 'not slow'")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    for name in ("TORIC_FIELD_CAP", "TORIC_POINT_CAP", "TORIC_CODEWORD_CAP", "TORIC_WORKERS",
                 "TORIC_SEED", "TORIC_SWEEP_SAMPLES", "TORIC_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def gf2():
    return make_field(2)


@pytest.fixture
def gf3():
    return make_field(3)


@pytest.fixture
def gf4():
    return make_field(2, 2)


@pytest.fixture
def gf5():
    return make_field(5)


@pytest.fixture
def gf7():
    return make_field(7)


@pytest.fixture
def gf8():
    return make_field(2, 3)


@pytest.fixture
def gf9():
    return make_field(3, 2)


@pytest.fixture
def k22_file(tmp_path):
    path = tmp_path / "k22.json"
    path.write_text(json.dumps({"n": 4, "edges": [[1, 3], [1, 4], [2, 3], [2, 4]]}))
    return path


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3], [1, 3]]}))
    return path
