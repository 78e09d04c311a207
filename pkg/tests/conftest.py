import os
import sys
import random
from itertools import combinations

import networkx as nx
import pytest

# Add project root to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from polyzoo.formula import And, Const, Eq, Not, Or  # noqa: E402
from polyzoo.graph import Graph  # noqa: E402
from polyzoo.permanent import IntMatrix, TreeDecomposition  # noqa: E402

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


def atlas_graphs(max_n):
    """All graphs up to isomorphism with at most max_n <= 7 vertices."""
    return [Graph.from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() <= max_n]


def random_partial_ktree(rng, n, k, keep=0.7):
    """A random partial k-tree on n >= k + 1 vertices with a width-k decomposition.

    Returns:
        (edges, TreeDecomposition) where edges is a list of pairs.
    """
    bags = [frozenset(range(k + 1))]
    tree_edges = []
    cliques = [(c, 0) for c in combinations(range(k + 1), k)]
    ktree_edges = list(combinations(range(k + 1), 2))
    for v in range(k + 1, n):
        clique, home = rng.choice(cliques)
        bags.append(frozenset(clique) | {v})
        index = len(bags) - 1
        tree_edges.append((home, index))
        ktree_edges.extend((u, v) for u in clique)
        for sub in combinations(clique, k - 1):
            cliques.append((tuple(sub) + (v,), index))
    edges = [e for e in ktree_edges if rng.random() < keep]
    return edges, TreeDecomposition(tuple(bags), tuple(tree_edges))


def random_sparse_matrix(rng, n, edges, low=-3, high=3, diagonal=0.3):
    """Random integer matrix supported on the given edges (in both directions)
    and on part of the diagonal."""
    rows = [[0] * n for _ in range(n)]
    for u, v in edges:
        rows[u][v] = rng.randint(low, high)
        rows[v][u] = rng.randint(low, high)
    for i in range(n):
        if rng.random() < diagonal:
            rows[i][i] = rng.randint(low, high)
    return IntMatrix.from_rows(rows)


def random_formula(rng, nvars, depth=3):
    """A random quantifier-free color formula over x1..x{nvars}."""
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.1:
            return Const(rng.random() < 0.5)
        atom = Eq(rng.randint(1, nvars), rng.randint(1, nvars))
        return Not(atom) if rng.random() < 0.5 else atom
    choice = rng.random()
    if choice < 0.2:
        return Not(random_formula(rng, nvars, depth - 1))
    args = tuple(random_formula(rng, nvars, depth - 1) for _ in range(rng.randint(2, 3)))
    return And(args) if choice < 0.6 else Or(args)


@pytest.fixture(scope="session")
def atlas6():
    return atlas_graphs(6)


@pytest.fixture(scope="session")
def atlas5():
    return atlas_graphs(5)


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def data_dir():
    return DATA_DIR
