"""Incremental uncov/crit bookkeeping with exact undo.

Every edge lives in at most one intrusive doubly linked list: the ``uncov``
list (edges missed by S) or ``crit[u]`` (edges meeting S only in u). Edges
that meet S at least twice sit in no list. Node ids ``0..m-1`` are edges;
``m + u`` is the sentinel head of ``crit[u]`` and ``m + n`` heads ``uncov``.
"""
from __future__ import annotations

from .hypergraph import Hypergraph, resolve_bits

#: owner tag for edges hit by two or more vertices of S
MULTI = -1


class UndoFrame:
    """Relocation log of one ``add_vertex`` call.

    ``log`` is flat: ``(edge, previous owner, previous prev, previous next)``
    per relocated edge. ``max_head`` is the largest new head index among the
    crit lists of older vertices whose head moved (``m`` if one emptied), so
    ``max_head < i`` decides the reverse-search child test in O(1).
    """

    __slots__ = ("vertex", "depth", "log", "max_head", "broken", "prev_empty")

    def __init__(self, vertex, depth, log, max_head, broken, prev_empty):
        self.vertex = vertex
        self.depth = depth
        self.log = log
        self.max_head = max_head
        self.broken = broken
        self.prev_empty = prev_empty

    def __len__(self):
        return len(self.log) // 4

    def __repr__(self):
        return f"UndoFrame(v={self.vertex}, moves={len(self)}, broken={self.broken})"


class CritUncovState:
    def __init__(self, H: Hypergraph, bits: str | bool | None = "auto"):
        self.H = H
        m, n = H.m, H.n
        self.m = m
        self.n = n
        self.UNCOV = n
        self.use_bits = resolve_bits(H, bits)
        self.rows = H.bits.rows if self.use_bits else None
        self.S: list[int] = []
        self.in_S = bytearray(n)
        size = m + n + 1
        head = m + n
        nxt = list(range(size))
        prv = list(range(size))
        # uncov starts as every edge, ascending
        order = [head] + list(range(m)) + [head]
        for a, b in zip(order, order[1:]):
            nxt[a] = b
            prv[b] = a
        self.nxt = nxt
        self.prv = prv
        self.owner = [n] * m
        self.uncov_flags = bytearray(b"\x01") * m
        self.n_live = m
        self.n_empty = 0  # vertices of S whose crit list is empty

    # -- queries -----------------------------------------------------------

    def min_uncov(self) -> int:
        h = self.nxt[self.m + self.n]
        return h if h < self.m else self.m

    def min_crit(self, u: int) -> int:
        if not self.in_S[u]:
            raise ValueError(f"vertex {u} is not in S")
        h = self.nxt[self.m + u]
        return h if h < self.m else self.m

    def is_hitting(self) -> bool:
        return self.nxt[self.m + self.n] >= self.m

    def is_minimal(self) -> bool:
        """The minimality condition: every vertex of S has a critical edge."""
        return self.n_empty == 0

    def violated_vertex(self):
        nxt, m = self.nxt, self.m
        for u in self.S:
            if nxt[m + u] >= m:
                return u
        return None

    def _walk(self, head: int) -> list[int]:
        out = []
        nxt, m = self.nxt, self.m
        e = nxt[head]
        while e < m:
            out.append(e)
            e = nxt[e]
        return out

    def uncov(self) -> list[int]:
        return self._walk(self.m + self.n)

    def crit(self, u: int) -> list[int]:
        return self._walk(self.m + u)

    def snapshot(self):
        return (tuple(self.S), tuple(self.nxt), tuple(self.prv), tuple(self.owner),
                bytes(self.uncov_flags), self.n_live, self.n_empty)

    # -- updates -----------------------------------------------------------

    def add_vertex(self, v: int) -> UndoFrame:
        """Add ``v`` to S, moving edges of F(v) between lists; returns the undo log."""
        if self.in_S[v]:
            raise ValueError(f"vertex {v} is already in S")
        m = self.m
        UNC = self.n
        owner = self.owner
        nxt = self.nxt
        prv = self.prv
        flags = self.uncov_flags
        log: list[int] = []
        tail = m + v  # crit[v] is empty, new edges go to its tail in order
        max_head = -1
        emptied = 0
        if self.rows is not None and (self.H.complemented or self.n_live < len(self.H.occ[v])):
            edges = self._scan_live(v)
        else:
            edges = self.H.occ[v]
        for e in edges:
            o = owner[e]
            if o < 0:
                continue
            p = prv[e]
            q = nxt[e]
            nxt[p] = q
            prv[q] = p
            log += (e, o, p, q)
            if o == UNC:
                owner[e] = v
                flags[e] = 0
                nxt[tail] = e
                prv[e] = tail
                tail = e
            else:
                owner[e] = MULTI
                self.n_live -= 1
                if p == m + o:
                    # head of crit[o] moved
                    if q >= m:
                        emptied += 1
                        max_head = m
                    elif q > max_head:
                        max_head = q
        head = m + v
        nxt[tail] = head
        prv[head] = tail
        frame = UndoFrame(v, len(self.S), log, max_head, emptied > 0, self.n_empty)
        self.S.append(v)
        self.in_S[v] = 1
        self.n_empty += emptied + (tail == head)
        return frame

    def _scan_live(self, v: int) -> list[int]:
        """Edges of uncov and of every crit list whose real edge contains v.

        Uncov members come first, ascending, so crit[v] is built in order.
        """
        rows = self.rows
        nxt = self.nxt
        m = self.m
        found = []
        if self.H.complemented:
            def hit(e):
                return not rows[e] >> v & 1
        else:
            def hit(e):
                return rows[e] >> v & 1
        for head in [m + self.n] + [m + u for u in self.S]:
            e = nxt[head]
            while e < m:
                if hit(e):
                    found.append(e)
                e = nxt[e]
        return found

    def undo(self, frame: UndoFrame) -> None:
        """Revert the most recent ``add_vertex``; strict LIFO."""
        if not self.S or self.S[-1] != frame.vertex or frame.depth != len(self.S) - 1:
            raise ValueError("undo frames must be reverted in LIFO order")
        owner = self.owner
        nxt = self.nxt
        prv = self.prv
        log = frame.log
        flags = self.uncov_flags
        UNC = self.n
        multi_back = 0
        for k in range(len(log) - 4, -1, -4):
            e = log[k]
            if owner[e] >= 0:
                a = prv[e]
                b = nxt[e]
                nxt[a] = b
                prv[b] = a
            else:
                multi_back += 1
            p = log[k + 2]
            q = log[k + 3]
            nxt[p] = e
            prv[q] = e
            prv[e] = p
            nxt[e] = q
            o = log[k + 1]
            owner[e] = o
            if o == UNC:
                flags[e] = 1
        v = self.S.pop()
        head = self.m + v
        nxt[head] = head
        prv[head] = head
        self.in_S[v] = 0
        self.n_live += multi_back
        self.n_empty = frame.prev_empty


def init_state(H: Hypergraph, bits: str | bool | None = "auto") -> CritUncovState:
    return CritUncovState(H, bits)


def add_vertex(state: CritUncovState, v: int) -> UndoFrame:
    return state.add_vertex(v)


def undo(state: CritUncovState, frame: UndoFrame) -> None:
    state.undo(frame)


def min_uncov(state: CritUncovState) -> int:
    return state.min_uncov()


def min_crit(state: CritUncovState, u: int) -> int:
    return state.min_crit(u)


def violated_vertex(state: CritUncovState):
    return state.violated_vertex()


class EdgeBitsetState:
    """Same contract as ``CritUncovState`` with uncov and each crit list held
    as an m-bit characteristic vector over edge indices.

    An update costs one AND per vertex of S on m-bit ints instead of a walk
    over F(v), which wins when vertices occur in many edges. The undo frame
    stores the previous vectors, so restoring is a handful of assignments.
    """

    def __init__(self, H: Hypergraph, bits: str | bool | None = "auto"):
        self.H = H
        m, n = H.m, H.n
        self.m = m
        self.n = n
        self.use_bits = resolve_bits(H, bits)
        self.rows = H.bits.rows if self.use_bits else None
        full = (1 << m) - 1
        self.full = full
        occ_masks = []
        for v in range(n):
            mask = 0
            for i in H.occ[v]:
                mask |= 1 << i
            occ_masks.append(full ^ mask if H.complemented else mask)
        self.occ_masks = occ_masks
        self.miss_masks = [full ^ mask for mask in occ_masks]
        self.uncov_bits = full
        self.crit_bits = [0] * n
        self.S: list[int] = []
        self.in_S = bytearray(n)
        self.n_empty = 0

    def min_uncov(self) -> int:
        x = self.uncov_bits
        return (x & -x).bit_length() - 1 if x else self.m

    def min_crit(self, u: int) -> int:
        if not self.in_S[u]:
            raise ValueError(f"vertex {u} is not in S")
        x = self.crit_bits[u]
        return (x & -x).bit_length() - 1 if x else self.m

    def is_hitting(self) -> bool:
        return not self.uncov_bits

    def is_minimal(self) -> bool:
        return self.n_empty == 0

    def violated_vertex(self):
        for u in self.S:
            if not self.crit_bits[u]:
                return u
        return None

    def uncov(self) -> list[int]:
        return _positions(self.uncov_bits)

    def crit(self, u: int) -> list[int]:
        return _positions(self.crit_bits[u])

    def snapshot(self):
        return (tuple(self.S), self.uncov_bits, tuple(self.crit_bits), self.n_empty)

    def add_vertex(self, v: int) -> UndoFrame:
        if self.in_S[v]:
            raise ValueError(f"vertex {v} is already in S")
        occ = self.occ_masks[v]
        miss = self.miss_masks[v]
        crit = self.crit_bits
        uncov = self.uncov_bits
        log = [uncov]
        max_head = -1
        emptied = 0
        for u in self.S:
            c = crit[u]
            if c & occ:
                log += (u, c)
                c &= miss
                crit[u] = c
                if not c:
                    emptied += 1
                    max_head = self.m
                else:
                    h = (c & -c).bit_length() - 1
                    if h > max_head:
                        max_head = h
        mine = uncov & occ
        crit[v] = mine
        self.uncov_bits = uncov & miss
        frame = UndoFrame(v, len(self.S), log, max_head, emptied > 0, self.n_empty)
        self.S.append(v)
        self.in_S[v] = 1
        self.n_empty += emptied + (not mine)
        return frame

    def undo(self, frame: UndoFrame) -> None:
        if not self.S or self.S[-1] != frame.vertex or frame.depth != len(self.S) - 1:
            raise ValueError("undo frames must be reverted in LIFO order")
        log = frame.log
        crit = self.crit_bits
        self.uncov_bits = log[0]
        for k in range(1, len(log), 2):
            crit[log[k]] = log[k + 1]
        v = self.S.pop()
        crit[v] = 0
        self.in_S[v] = 0
        self.n_empty = frame.prev_empty


def _positions(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


ENGINES = ("lists", "bitset", "auto")


def choose_engine(H: Hypergraph, engine: str = "auto") -> str:
    """``auto`` picks the bitset engine when a vertex occurs, on average, in at
    least ``0.75 n`` edges: each update then touches far more edges than S
    has vertices."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    if engine != "auto":
        return engine
    if H.n == 0 or H.m == 0:
        return "lists"
    return "bitset" if 4 * H.real_total_size() >= 3 * H.n * H.n else "lists"


def make_state(H: Hypergraph, bits: str | bool | None = "auto", engine: str = "auto"):
    if choose_engine(H, engine) == "bitset":
        return EdgeBitsetState(H, bits)
    return CritUncovState(H, bits)
