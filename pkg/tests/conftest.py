import random

import pytest
from hypothesis import strategies as st

from octomod.octonion import Octonion
from octomod.verify.generators import Gen

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=5)
octonions = st.lists(rationals, min_size=8, max_size=8).map(Octonion)


@pytest.fixture
def gen():
    """Factory for seeded generators: gen(seed) -> Gen."""
    return lambda seed, max_rank=2, bound=5: Gen(random.Random(seed), max_rank, bound)
