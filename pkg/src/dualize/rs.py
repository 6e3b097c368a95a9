"""Reverse search over minimal hitting sets of all edge prefixes.

The search tree spans every S that is a minimal hitting set of some prefix
``F_0..F_{i-1}``. The parent of S drops the vertex whose first critical edge
comes last; the children of S are found by adding each vertex of the first
uncovered edge and checking that no older vertex lost all critical edges
below that edge's index.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .hypergraph import Hypergraph
from .sink import EnumStats, LimitReached, MhsSink
from .state import make_state


@dataclass
class RsOptions:
    prune: bool = True
    bits: str | bool | None = "auto"
    engine: str = "auto"


def _scratch_lists(H: Hypergraph, S):
    """uncov and crit of S recomputed from the edge list."""
    S = set(S)
    uncov = []
    crit = {u: [] for u in S}
    for i, edge in enumerate(H.real_edges()):
        hit = [v for v in edge if v in S]
        if not hit:
            uncov.append(i)
        elif len(hit) == 1:
            crit[hit[0]].append(i)
    return uncov, crit


def in_search_space(H: Hypergraph, S) -> bool:
    """True iff every vertex's first critical edge precedes the first uncovered edge."""
    if not S:
        return True
    uncov, crit = _scratch_lists(H, S)
    first_uncov = uncov[0] if uncov else H.m
    return all(crit[u] and crit[u][0] < first_uncov for u in crit)


def parent(H: Hypergraph, S) -> tuple:
    """Parent of a nonempty member of the search space (computed from scratch)."""
    S = tuple(sorted(S))
    if not S:
        raise ValueError("the empty set has no parent")
    if not in_search_space(H, S):
        raise ValueError(f"{S} is not in the reverse-search space")
    _, crit = _scratch_lists(H, S)
    drop = max(S, key=lambda u: crit[u][0])
    return tuple(u for u in S if u != drop)


def is_child(state, v: int) -> bool:
    """Would ``S + v`` be a child of the current S? The state is left unchanged."""
    i = state.min_uncov()
    if i >= state.m:
        raise ValueError("S is already a hitting set; it has no children")
    if v not in state.H.members(i):
        raise ValueError(f"vertex {v} is not in the first uncovered edge")
    old = list(state.S)
    frame = state.add_vertex(v)
    try:
        return all(state.min_crit(u) < i for u in old)
    finally:
        state.undo(frame)


def enumerate_rs(H: Hypergraph, sink: MhsSink | None = None, opts: RsOptions | None = None,
                 on_node=None) -> EnumStats:
    """Emit every minimal hitting set of ``H`` into ``sink``.

    ``on_node(S, parent)`` is called for every subset the search reaches,
    including hitting sets emitted by the pruning pre-pass.
    """
    opts = opts or RsOptions()
    sink = sink if sink is not None else MhsSink()
    stats = EnumStats(algorithm="rs")
    t0 = time.perf_counter()
    state = make_state(H, opts.bits, opts.engine)
    try:
        _run(H, state, sink, opts.prune, stats, on_node)
    except LimitReached as exc:
        stats.aborted = str(exc)
    stats.outputs = sink.count
    stats.seconds = time.perf_counter() - t0
    return stats


def _run(H, state, sink, prune, stats, on_node):
    m = H.m
    members = H.members
    add = state.add_vertex
    undo = state.undo
    hitting = state.is_hitting
    first_uncov = state.min_uncov
    S = state.S
    banned = bytearray(H.n)
    emit = sink.emit

    stats.nodes = 1
    if on_node:
        on_node((), None)
    if m == 0:
        emit(())
        return

    def expand():
        """Frame for the current S: [i, candidates, next index, newly banned, entry frame]."""
        i = first_uncov()
        if not prune:
            return [i, members(i), 0, None, None]
        children = []
        newly = []
        for v in members(i):
            if banned[v]:
                stats.pruned += 1
                continue
            f = add(v)
            stats.checks += 1
            if f.broken:
                newly.append(v)
            elif hitting():
                if f.max_head < i:
                    if on_node:
                        on_node(tuple(S), tuple(S[:-1]))
                    emit(S)
                newly.append(v)
            elif f.max_head < i:
                children.append(v)
            undo(f)
        for v in newly:
            banned[v] = 1
        return [i, children, 0, newly, None]

    stack = [expand()]
    ticks = 0
    while stack:
        top = stack[-1]
        cands = top[1]
        k = top[2]
        if k < len(cands):
            top[2] = k + 1
            v = cands[k]
            f = add(v)
            if not prune:
                stats.checks += 1
                if f.max_head >= top[0]:
                    undo(f)
                    continue
            stats.nodes += 1
            if len(S) > stats.max_depth:
                stats.max_depth = len(S)
            if on_node:
                on_node(tuple(S), tuple(S[:-1]))
            ticks += 1
            if ticks & 1023 == 0:
                sink.check_time()
            if hitting():
                emit(S)
                undo(f)
                continue
            frame = expand()
            frame[4] = f
            stack.append(frame)
        else:
            stack.pop()
            if top[3]:
                for v in top[3]:
                    banned[v] = 0
            if top[4] is not None:
                undo(top[4])
