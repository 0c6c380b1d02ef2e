"""Shared corpora and fixtures.

The random corpus is seeded so every run sees the same 200 ideals
(dimension at most 3, at most 4 generators, exponents at most 4).
"""

import random

import pytest

from ratpow.ideals import MonomialIdeal, parse_ideal

CORPUS_SEED = 20250809


def make_corpus(count: int, dmax: int = 3, max_gens: int = 4, max_exp: int = 4,
                seed: int = CORPUS_SEED, squarefree: bool = False):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(1, dmax)
        k = rng.randint(1, max_gens)
        top = 1 if squarefree else max_exp
        gens = {tuple(rng.randint(0, top) for _ in range(d)) for _ in range(k)}
        gens.discard((0,) * d)
        if not gens:
            continue
        out.append(MonomialIdeal.from_gens(sorted(gens), dim=d))
    return out


@pytest.fixture(scope="session")
def corpus200():
    return make_corpus(200)


@pytest.fixture(scope="session")
def corpus40(corpus200):
    return corpus200[:40]


@pytest.fixture(scope="session")
def squarefree_corpus():
    return make_corpus(60, squarefree=True, seed=CORPUS_SEED + 1)


@pytest.fixture(scope="session")
def triangle():
    return parse_ideal("x*y, y*z, z*x", ("x", "y", "z"))


@pytest.fixture(scope="session")
def cusp():
    return parse_ideal("x^2, y^3", ("x", "y"))
