from itertools import permutations

import pytest

from involute.semigroups import validate


def brute_morphisms(s, anti=False):
    """All bijective (anti-)morphisms of s, by filtering every permutation."""
    n, t = s.n, s.table
    out = []
    for p in permutations(range(n)):
        if all(
            p[t[i][j]] == (t[p[j]][p[i]] if anti else t[p[i]][p[j]])
            for i in range(n)
            for j in range(n)
        ):
            out.append(p)
    return out


@pytest.fixture
def klein():
    return validate([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])


@pytest.fixture
def left_zero_2():
    return validate([[0, 0], [1, 1]])


@pytest.fixture
def right_zero_2():
    return validate([[0, 1], [0, 1]])
