import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("fullab", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("fullab")


@pytest.fixture(scope="session")
def isomers():
    from fullab import spiral

    return {n: spiral.enumerate_isomers(n) for n in range(20, 37, 2)}
