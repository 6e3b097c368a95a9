from itertools import combinations

import pytest

from dualize import Hypergraph, parse_hypergraph

EXAMPLE_TEXT = "1 2\n1 3\n2 3 4\n"
EXAMPLE_DUAL = [(1, 2), (1, 3), (1, 4), (2, 3)]


def definition_dual(label_sets):
    """Minimal hitting sets straight from the definition, on labels.

    Kept free of any package code so it can serve as an oracle.
    """
    edges = [set(e) for e in label_sets]
    universe = sorted({x for e in edges for x in e})
    out = []
    for k in range(len(universe) + 1):
        for combo in combinations(universe, k):
            s = set(combo)
            if not all(e & s for e in edges):
                continue
            if any(all(e & (s - {v}) for e in edges) for v in s):
                continue
            out.append(combo)
    return sorted(out)


def labels_of(H: Hypergraph, sets):
    return sorted(tuple(sorted(H.labels[v] for v in s)) for s in sets)


@pytest.fixture
def example():
    return parse_hypergraph(EXAMPLE_TEXT)
