import pytest

from freecurve.construct import load_catalog


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def catalog_by_id(catalog):
    return {entry.id: entry for entry in catalog}
