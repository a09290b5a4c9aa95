import os

import hypothesis
import pytest

from strategies import EICU_BENEFIT, EICU_COMPETING, makeInstance

hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


# ten hospitals: three competing pairs, a 0-3-4 triangle feeding the 5..9 ring, and a 1-2 pair
@pytest.fixture
def eicu():
    return makeInstance(10, EICU_BENEFIT, EICU_COMPETING)

# 1 and 2 help each other; 0 competes with 1
@pytest.fixture
def cycleInstance():
    return makeInstance(3, [(1, 2, 1.0), (2, 1, 1.0)], [(0, 1)])

# {0,1} -> {2} -> {3,4}
@pytest.fixture
def pathInstance():
    return makeInstance(5, [(0, 1, 1.0), (1, 0, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0), (4, 3, 1.0)])

# {0,1} -> {2,3}
@pytest.fixture
def neighborsInstance():
    return makeInstance(4, [(0, 1, 1.0), (1, 0, 1.0), (2, 3, 1.0), (3, 2, 1.0), (1, 2, 1.0)])
