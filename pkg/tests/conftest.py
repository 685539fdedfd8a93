import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture
def F2():
    from bicyclic_endo import BicyclicExtension

    return BicyclicExtension.F(2)
