import random

import pytest

import topologic as t

F = frozenset


@pytest.fixture
def m0_space():
    return t.make_space(["x0", "x1", "x2"], [F(), F({0}), F({0, 1}), F({0, 1, 2})])


@pytest.fixture
def m0(m0_space):
    return t.make_model(m0_space, {"A": F({0}), "B": F({0, 1})})


def random_topology(rng: random.Random, n: int) -> t.SubsetSpace:
    names = [f"x{i}" for i in range(n)]
    k = rng.randint(0, 4)
    subbasis = [frozenset(i for i in range(n) if rng.random() < 0.5)
                for _ in range(k)]
    return t.generate_topology(subbasis, names)


def random_model(rng: random.Random, n: int, atom_names=("A", "B")) -> t.Model:
    space = random_topology(rng, n)
    val = {a: frozenset(i for i in range(n) if rng.random() < 0.5)
           for a in atom_names}
    return t.make_model(space, val)
