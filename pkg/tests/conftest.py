"""Shared test fixtures: seeded random diagram generators.

The seed is taken from DLKNOT_SEED so randomized runs are reproducible;
the library itself is deterministic.
"""

import os
import random

import pytest

from dlknot.diagram import DlDiagram, DoubleLine, Passage

SEED = int(os.environ.get("DLKNOT_SEED", "20230823"))


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_diagram(rng, max_crossings=8, max_double_lines=12, degree_zero=False):
    """A uniformly shuffled valid cyclic code.

    Any interleaving of passage pairs is realizable (virtual crossings
    absorb planarity), so shuffling is enough.  With ``degree_zero`` the
    double-line signs are balanced.
    """
    n = rng.randint(0, max_crossings)
    tokens = []
    for cid in range(1, n + 1):
        s = rng.choice([1, -1])
        tokens.append(Passage(cid, "U", s))
        tokens.append(Passage(cid, "O", s))
    k = rng.randint(0, max_double_lines)
    if degree_zero:
        k -= k % 2
        signs = [1] * (k // 2) + [-1] * (k // 2)
    else:
        signs = [rng.choice([1, -1]) for _ in range(k)]
    tokens.extend(DoubleLine(s) for s in signs)
    rng.shuffle(tokens)
    return DlDiagram(tuple(tokens))


def random_degree_zero(rng, max_crossings=8, max_double_lines=12):
    return random_diagram(rng, max_crossings, max_double_lines, degree_zero=True)
