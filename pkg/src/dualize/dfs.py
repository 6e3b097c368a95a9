"""Hill-climbing depth-first search with a candidate list.

S grows one vertex at a time while the minimality condition holds. Each
call branches on the uncovered edge with the fewest remaining candidates, so
every minimal hitting set containing S and inside ``S + CAND`` is reached
exactly once.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .hypergraph import Hypergraph, bits_of
from .sink import EnumStats, LimitReached, MhsSink
from .state import EdgeBitsetState, make_state


@dataclass
class DfsOptions:
    prune: bool = True
    bits: str | bool | None = "auto"
    engine: str = "auto"
    counter: bool | None = None  # None: by edge count


def _uncov_edges(state):
    if isinstance(state, EdgeBitsetState):
        yield from state.uncov()
        return
    m = state.m
    nxt = state.nxt
    e = nxt[m + state.n]
    while e < m:
        yield e
        e = nxt[e]


def choose_branch_edge(state, cand: int) -> tuple[int, int]:
    """Uncovered edge minimizing ``|F & CAND|`` (lowest index on ties).

    ``cand`` is a vertex bitmask. Returns ``(edge index, count)``; a count of
    zero means the branch is a dead end.
    """
    if state.is_hitting():
        raise ValueError("S is already a hitting set")
    best = -1
    best_count = state.n + 1
    rows = state.rows
    if rows is None:
        edges = state.H.edges
        for e in _uncov_edges(state):
            c = 0
            for u in edges[e]:
                c += cand >> u & 1
            if c < best_count:
                best, best_count = e, c
                if c == 0:
                    break
    elif state.H.complemented:
        for e in _uncov_edges(state):
            c = (cand & ~rows[e]).bit_count()
            if c < best_count:
                best, best_count = e, c
                if c == 0:
                    break
    else:
        for e in _uncov_edges(state):
            c = (cand & rows[e]).bit_count()
            if c < best_count:
                best, best_count = e, c
                if c == 0:
                    break
    return best, best_count


#: edge count from which DFS keeps |F & CAND| for every edge in numpy
COUNTER_MIN_EDGES = 128


class CandCounter:
    """``|F & CAND|`` for every edge, kept current as CAND changes.

    In complemented storage the counts are over co-edges and the real count
    is ``|CAND| - count``.
    """

    def __init__(self, state, cand: int):
        H = state.H
        self.state = state
        self.comp = H.complemented
        self.idx = [np.asarray(o, dtype=np.intp) for o in H.occ]
        self.cnt = np.zeros(H.m, dtype=np.int64)
        self.size = 0
        for v in bits_of(cand):
            self.put(v)
        if isinstance(state, EdgeBitsetState):
            self._nbytes = (H.m + 7) // 8
            self._flags = None
        else:
            self._flags = np.frombuffer(state.uncov_flags, dtype=np.bool_)

    def put(self, v: int) -> None:
        self.cnt[self.idx[v]] += 1
        self.size += 1

    def drop(self, v: int) -> None:
        self.cnt[self.idx[v]] -= 1
        self.size -= 1

    def uncov_mask(self):
        if self._flags is not None:
            return self._flags
        raw = self.state.uncov_bits.to_bytes(self._nbytes, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little", count=self.state.m)
        return bits.view(np.bool_)

    def best(self) -> tuple[int, int]:
        values = self.size - self.cnt if self.comp else self.cnt
        masked = np.where(self.uncov_mask(), values, np.iinfo(np.int64).max)
        e = int(masked.argmin())
        return e, int(masked[e])


class _Frame:
    __slots__ = ("todo", "k", "violating", "entry", "vertex", "cand_in")

    def __init__(self, todo, entry, vertex, cand_in):
        self.todo = todo
        self.k = 0
        self.violating = []
        self.entry = entry
        self.vertex = vertex
        self.cand_in = cand_in


def enumerate_dfs(H: Hypergraph, sink: MhsSink | None = None, opts: DfsOptions | None = None,
                  on_node=None, check_cand: bool = False) -> EnumStats:
    """Emit every minimal hitting set of ``H`` into ``sink``.

    With ``prune`` off, a vertex whose addition breaks minimality is still
    put back into CAND after the test, so later siblings retry it.
    ``check_cand`` asserts that each frame hands CAND back unchanged.
    """
    opts = opts or DfsOptions()
    sink = sink if sink is not None else MhsSink()
    stats = EnumStats(algorithm="dfs")
    t0 = time.perf_counter()
    state = make_state(H, opts.bits, opts.engine)
    use_counter = opts.counter if opts.counter is not None else H.m >= COUNTER_MIN_EDGES
    try:
        _run(H, state, sink, opts.prune, stats, on_node, check_cand, use_counter)
    except LimitReached as exc:
        stats.aborted = str(exc)
    stats.outputs = sink.count
    stats.seconds = time.perf_counter() - t0
    return stats


def _run(H, state, sink, prune, stats, on_node, check_cand, use_counter):
    m = H.m
    add = state.add_vertex
    undo = state.undo
    hitting = state.is_hitting
    S = state.S
    emit = sink.emit
    edge_mask = H.edge_mask if state.rows is not None else None
    edges = H.edges

    cand = 0
    if H.complemented:
        for i in range(m):
            cand |= H.edge_mask(i)
    else:
        for v in range(H.n):
            if H.occ[v]:
                cand |= 1 << v
    counter = CandCounter(state, cand) if use_counter else None

    stats.nodes = 1
    if on_node:
        on_node(())
    if hitting():
        emit(())
        return

    def expand(entry, vertex):
        nonlocal cand
        cand_in = cand
        if counter is not None:
            e, count = counter.best()
        else:
            e, count = choose_branch_edge(state, cand)
        if count == 0:
            return _Frame((), entry, vertex, cand_in)
        if edge_mask is not None:
            c = cand & edge_mask(e)
        else:
            c = 0
            for u in edges[e]:
                c |= cand & (1 << u)
        cand &= ~c
        todo = bits_of(c)
        if counter is not None:
            for u in todo:
                counter.drop(u)
        todo.reverse()
        return _Frame(todo, entry, vertex, cand_in)

    def put_back(v):
        nonlocal cand
        cand |= 1 << v
        if counter is not None:
            counter.put(v)

    stack = [expand(None, -1)]
    ticks = 0
    while stack:
        top = stack[-1]
        if top.k < len(top.todo):
            v = top.todo[top.k]
            top.k += 1
            f = add(v)
            stats.checks += 1
            if f.broken:
                undo(f)
                if prune:
                    top.violating.append(v)
                else:
                    put_back(v)
                continue
            if hitting():
                if on_node:
                    on_node(tuple(S))
                emit(S)
                undo(f)
                if prune:
                    top.violating.append(v)
                else:
                    put_back(v)
                continue
            stats.nodes += 1
            if len(S) > stats.max_depth:
                stats.max_depth = len(S)
            if on_node:
                on_node(tuple(S))
            ticks += 1
            if ticks & 1023 == 0:
                sink.check_time()
            stack.append(expand(f, v))
        else:
            stack.pop()
            for u in top.violating:
                put_back(u)
            if check_cand and cand != top.cand_in:
                raise AssertionError("CAND not restored on frame exit")
            if top.entry is not None:
                undo(top.entry)
                put_back(top.vertex)
