import pytest

from gazekit.dataset import load_catalog
from gazekit.fixture import build_fixture


@pytest.fixture(scope="session")
def fixture_root(tmp_path_factory):
    root = tmp_path_factory.mktemp("collection")
    return build_fixture(root)


@pytest.fixture(scope="session")
def catalog(fixture_root):
    return load_catalog(fixture_root)
