import os

import pytest
from hypothesis import HealthCheck, settings

from sl2forms.derham import Config
from sl2forms.singular import generic_module, verma_alphabet

settings.register_profile("default", deadline=None, max_examples=25,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture])
settings.register_profile("thorough", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture])
settings.load_profile(os.environ.get("SL2FORMS_HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def alphabet():
    return verma_alphabet()


@pytest.fixture
def module(alphabet):
    """Verma module with symbolic highest weight M and level k."""
    return generic_module(alphabet)


@pytest.fixture
def symbolic2():
    """Two marked points, everything symbolic."""
    return Config.symbolic(2)


@pytest.fixture
def numeric_points2():
    """Symbolic weights and level, marked points at 0 and 1."""
    return Config.symbolic(2, points=(0, 1))
