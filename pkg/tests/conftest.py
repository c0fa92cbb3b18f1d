import random

import numpy as np
import pytest

from bentforge.boolfun import BooleanFunction


@pytest.fixture
def rng():
    return random.Random(0xBEADED)


def random_function(n: int, rng: random.Random) -> BooleanFunction:
    return BooleanFunction(n, [rng.randrange(2) for _ in range(1 << n)])


def random_permutation_table(m: int, rng: random.Random) -> np.ndarray:
    perm = list(range(1 << m))
    rng.shuffle(perm)
    return np.array(perm, dtype=np.int64)
