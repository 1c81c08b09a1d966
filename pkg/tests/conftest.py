from itertools import permutations

import networkx as nx
import pytest

from forestperm.core import make_permutation


def perms(n):
    return [make_permutation(t) for t in permutations(range(1, n + 1))]


def all_perms(max_n):
    return [p for n in range(1, max_n + 1) for p in perms(n)]


def nx_graph_of(p):
    """Independent construction straight from the covering definition, for oracles."""
    g = nx.Graph()
    g.add_nodes_from(range(1, p.n + 1))
    v = p.values
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if v[i] < v[j] and not any(v[i] < v[k] < v[j] for k in range(i + 1, j)):
                g.add_edge(i + 1, j + 1)
    return g


@pytest.fixture(scope="session")
def s7():
    return all_perms(7)
