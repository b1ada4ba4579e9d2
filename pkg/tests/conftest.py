import pytest
from hypothesis import HealthCheck, settings

from hhbounds.core import builtin_catalog, catalog_by_id

settings.register_profile(
    "deterministic",
    derandomize=True,
    max_examples=80,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


@pytest.fixture(scope="session")
def by_id():
    return catalog_by_id()
