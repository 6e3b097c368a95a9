"""Reference dualizers used as correctness oracles."""
from __future__ import annotations

from itertools import combinations

from .hypergraph import Hypergraph, bits_of
from .sink import DualCollection

BRUTE_MAX_N = 25


def enumerate_brute(H: Hypergraph, max_n: int = BRUTE_MAX_N) -> DualCollection:
    """Scan all vertex subsets in order of size.

    A subset is kept when it hits every edge and each of its vertices has a
    critical edge. Because smaller subsets come first, each kept set is also
    checked against the sets kept before it.
    """
    n = H.n
    if n > max_n:
        raise ValueError(f"brute force refuses n={n} (limit {max_n})")
    masks = [H.edge_mask(i) for i in range(H.m)]
    found: list[int] = []
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            if not all(e & s for e in masks):
                continue
            critical = 0
            for e in masks:
                hit = e & s
                if hit & (hit - 1) == 0:
                    critical |= hit
            if critical != s:
                continue
            if any(f & s == f for f in found):
                raise AssertionError(f"minimality oracles disagree on {combo}")
            found.append(s)
    return DualCollection([bits_of(s) for s in found])


def enumerate_dl(H: Hypergraph, trace=None) -> DualCollection:
    """Edge-by-edge dualization: extend ``dual(F_1..F_{i-1})`` with ``F_i``.

    ``trace(i, sets)`` receives each intermediate dual (after ``i+1`` edges).
    """
    current = [0]
    for i in range(H.m):
        edge = H.edge_mask(i)
        verts = bits_of(edge)
        # sets of the previous dual that contain each vertex
        by_vertex: dict[int, list[int]] = {}
        for s in current:
            for v in bits_of(s):
                by_vertex.setdefault(v, []).append(s)
        nxt = []
        for s in current:
            if s & edge:
                nxt.append(s)
                continue
            for v in verts:
                grown = s | 1 << v
                # any other subset of the grown set must contain v
                if any(t != s and t & grown == t for t in by_vertex.get(v, ())):
                    continue
                nxt.append(grown)
        current = nxt
        if trace is not None:
            trace(i, DualCollection([bits_of(s) for s in current]))
    return DualCollection([bits_of(s) for s in current])
