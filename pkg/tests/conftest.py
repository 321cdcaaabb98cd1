"""Shared fixtures and independent oracles for the test suite.

Oracles here deliberately avoid the code paths they check: float spectra
come from numpy's LAPACK wrapper (not the package's Jacobi), domination
numbers from exhaustive subset search, and isomorphism tests from raw
permutation search.
"""

import itertools
import random

import numpy as np
import pytest

from unilap.graphs import Graph, make_compass, make_cycle, make_lollipop, make_path
from unilap.graphs import CompassParams
from unilap.harness import random_tree, random_unicyclic
from unilap.spectra import laplacian_rows


def numpy_eigs(g: Graph) -> np.ndarray:
    """Laplacian eigenvalues via numpy, sorted ascending."""
    return np.linalg.eigvalsh(np.array(laplacian_rows(g), dtype=float))


def exhaustive_gamma(g: Graph) -> int:
    """Minimum dominating set size by trying all subsets, smallest first."""
    assert g.n <= 10, "exhaustive oracle is for tiny graphs"
    closed = [{v, *g.adj[v]} for v in range(g.n)]
    for k in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            if set().union(*(closed[v] for v in subset)) == set(range(g.n)):
                return k
    raise AssertionError("unreachable")


def graphs_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    target = set(g2.edges())
    for perm in itertools.permutations(range(g1.n)):
        if all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in target
            for u, v in g1.edges()
        ):
            return True
    return False


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    """Small mixed bag of family and random graphs for property checks."""
    rng = random.Random(7)
    graphs = [make_path(n) for n in (1, 2, 3, 5, 9)]
    graphs += [make_cycle(n) for n in (3, 4, 6, 7, 12)]
    graphs += [make_lollipop(8, 3), make_lollipop(12, 8), make_lollipop(9, 6)]
    graphs += [
        make_compass(CompassParams(8, 3, 1, 1)),
        make_compass(CompassParams(14, 8, 4, 3)),
        make_compass(CompassParams(12, 6, 3, 1)),
    ]
    graphs += [random_tree(rng, rng.randrange(2, 14)) for _ in range(4)]
    graphs += [random_unicyclic(rng, rng.randrange(4, 14)) for _ in range(4)]
    return graphs
