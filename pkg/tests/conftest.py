import numpy as np
import pytest

from sga.profiles import make_profile


@pytest.fixture
def const_profile():
    return make_profile("constant")


@pytest.fixture
def exp_profile():
    # anchored so mu(0) = 1, image (0, inf)
    return make_profile("exponential", [1.0], anchor=(0.0, 1.0))


@pytest.fixture
def arctan_profile():
    return make_profile("rational-arctan", anchor=(0.0, 0.0))


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
