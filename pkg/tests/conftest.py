import random

import numpy as np
import pytest

from coxc.coxeter import INF, CoxeterMatrix

# 15 reversible generators on 7 lines, ordered as in reversible_generators(7)
REVERSIBLE_7 = [
    [1, 3, 2, 2, 2, 2, 4, 3, 2, 6, 3, 2, 2, 2, 2],
    [3, 1, 3, 2, 2, 2, 2, 4, 6, 2, 2, 2, 2, 2, 4],
    [2, 3, 1, 3, 2, 2, 2, 2, 4, 6, 4, 2, 2, 2, 2],
    [2, 2, 3, 1, 3, 2, 2, 2, 2, 2, 2, 3, 3, 2, 2],
    [2, 2, 2, 3, 1, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2],
    [2, 2, 2, 2, 3, 1, 2, 2, 2, 2, 2, 2, 2, 3, 2],
    [4, 2, 2, 2, 2, 2, 1, 4, 4, 4, 4, 4, 4, 4, 2],
    [3, 4, 2, 2, 2, 2, 4, 1, 4, 4, 2, 3, 3, 3, 4],
    [2, 6, 4, 2, 2, 2, 4, 4, 1, 3, 4, 6, 6, 6, 4],
    [6, 2, 6, 2, 2, 2, 4, 4, 3, 1, 2, 4, 4, 4, 4],
    [3, 2, 4, 2, 2, 2, 4, 2, 4, 2, 1, 4, 4, 4, 4],
    [2, 2, 2, 3, 2, 2, 4, 3, 6, 4, 4, 1, 2, 2, 2],
    [2, 2, 2, 3, 2, 2, 4, 3, 6, 4, 4, 2, 1, 2, 2],
    [2, 2, 2, 2, 2, 3, 4, 3, 6, 4, 4, 2, 2, 1, 2],
    [2, 4, 2, 2, 2, 2, 2, 4, 4, 4, 4, 2, 2, 2, 1],
]

# 13 quantum generators on 4 qubits; the ">8" entry (SWAP_12, CH_12) is INF
QUANTUM_4 = [
    [1, 3, 2, 4, 4, 4, 4, 3, 3, 2, INF, 2, 6],
    [3, 1, 3, 2, 2, 2, 2, 4, 4, 4, 4, 6, 2],
    [2, 3, 1, 2, 2, 2, 2, 2, 2, 2, 2, 4, 6],
    [4, 2, 2, 1, 4, 4, 8, 4, 4, 4, 4, 4, 4],
    [4, 2, 2, 4, 1, 4, 4, 4, 4, 4, 4, 4, 4],
    [4, 2, 2, 4, 4, 1, 8, 2, 2, 2, 2, 2, 2],
    [4, 2, 2, 8, 4, 8, 1, 8, 8, 8, 8, 8, 8],
    [3, 4, 2, 4, 4, 2, 8, 1, 4, 4, 8, 4, 4],
    [3, 4, 2, 4, 4, 2, 8, 4, 1, 4, 4, 4, 4],
    [2, 4, 2, 4, 4, 2, 8, 4, 4, 1, 8, 2, 4],
    [INF, 4, 2, 4, 4, 2, 8, 8, 4, 8, 1, 8, 4],
    [2, 6, 4, 4, 4, 2, 8, 4, 4, 2, 8, 1, 3],
    [6, 2, 6, 4, 4, 2, 8, 4, 4, 4, 4, 3, 1],
]

# generator graph of the single-clause word, 1-based edges (i, j, m)
CLAUSE_EDGES = [(1, 4, 4), (2, 4, 4), (3, 5, 4), (4, 5, 4), (5, 7, 4)]
CLAUSE_WORD = [1, 2, 3, 4, 5, 7, 5, 4, 3, 2, 1]
CLAUSE_EXPECTED = [2, 1, 4, 3, 5, 7, 5, 4, 3, 2, 1]


def type_a(n: int) -> CoxeterMatrix:
    """A_n: the path on n vertices with m = 3, i.e. the symmetric group S_{n+1}."""
    return CoxeterMatrix.from_edges(n, [(i, i + 1, 3) for i in range(1, n)])


def sym_eval(w, n_points: int) -> tuple:
    """Permutation of range(n_points) for a word of adjacent transpositions (time order)."""
    perm = list(range(n_points))
    for g in w:
        perm[g], perm[g + 1] = perm[g + 1], perm[g]
    return tuple(perm)


def random_word(rng: random.Random, rank: int, max_len: int) -> list:
    return [rng.randrange(rank) for _ in range(rng.randint(0, max_len))]


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def reversible_matrix():
    from coxc.gates import extract_coxeter_matrix, reversible_generators

    return extract_coxeter_matrix(reversible_generators(7), 7)


@pytest.fixture(scope="session")
def np_rng():
    return np.random.default_rng(2024)
