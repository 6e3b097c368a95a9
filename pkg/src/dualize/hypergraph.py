"""Immutable hypergraph representation and its text format.

Vertices are dense internal ids ``0..n-1``; each internal id maps back to the
non-negative integer label it was read with. Edges keep their input order,
which matters to the reverse-search enumerator.
"""
from __future__ import annotations

import io
from typing import IO, Iterable, Sequence


class ParseError(ValueError):
    """Raised for malformed instance text; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class BitMatrix:
    """One ``n``-bit row per stored edge, held as Python ints."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        self.n = n
        self.rows = tuple(rows)

    def __len__(self):
        return len(self.rows)

    def has(self, i: int, v: int) -> bool:
        return bool(self.rows[i] >> v & 1)

    def __eq__(self, other):
        return isinstance(other, BitMatrix) and self.n == other.n and self.rows == other.rows

    def __repr__(self):
        return f"BitMatrix(n={self.n}, rows={len(self.rows)})"


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def bits_of(mask: int) -> list[int]:
    """Ascending positions of the set bits of ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Hypergraph:
    """An edge list over ``n`` vertices plus its occurrence index.

    When ``complemented`` is set the stored edges are co-edges ``V - F``; the
    hypergraph still *means* the original family, only the storage differs.
    """

    __slots__ = ("n", "labels", "edges", "occ", "total_size", "complemented", "_bits")

    def __init__(
        self,
        n: int,
        edges: Iterable[Iterable[int]],
        labels: Sequence[int] | None = None,
        complemented: bool = False,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.labels = tuple(range(n)) if labels is None else tuple(labels)
        if len(self.labels) != n:
            raise ValueError(f"expected {n} labels, got {len(self.labels)}")
        seen = set()
        stored = []
        for raw in edges:
            edge = tuple(sorted(raw))
            for a, b in zip(edge, edge[1:]):
                if a == b:
                    raise ValueError(f"vertex {a} repeated within an edge")
            if edge and (edge[0] < 0 or edge[-1] >= n):
                raise ValueError(f"edge {edge} has ids outside [0, {n})")
            if edge in seen:
                continue
            seen.add(edge)
            stored.append(edge)
        self.edges = tuple(stored)
        occ: list[list[int]] = [[] for _ in range(n)]
        for i, edge in enumerate(self.edges):
            for v in edge:
                occ[v].append(i)
        self.occ = tuple(tuple(o) for o in occ)
        self.total_size = sum(len(e) for e in self.edges)
        self.complemented = complemented
        self._bits = None

    @classmethod
    def from_label_sets(cls, sets: Iterable[Iterable[int]], complemented: bool = False) -> "Hypergraph":
        """Build from label sets; the universe is the set of labels that occur."""
        sets = [list(s) for s in sets]
        universe = sorted({x for s in sets for x in s})
        index = {label: k for k, label in enumerate(universe)}
        return cls(len(universe), ([index[x] for x in s] for s in sets), universe, complemented)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def bits(self) -> BitMatrix:
        if self._bits is None:
            self._bits = build_bit_matrix(self)
        return self._bits

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edge_mask(self, i: int) -> int:
        """Characteristic vector of the (real) edge ``i``."""
        row = self.bits.rows[i]
        return self.full_mask & ~row if self.complemented else row

    def members(self, i: int) -> Sequence[int]:
        """Vertices of the real edge ``i``, ascending."""
        if self.complemented:
            return bits_of(self.edge_mask(i))
        return self.edges[i]

    def real_edges(self) -> list[tuple[int, ...]]:
        if not self.complemented:
            return list(self.edges)
        return [tuple(self.members(i)) for i in range(self.m)]

    def real_total_size(self) -> int:
        return self.n * self.m - self.total_size if self.complemented else self.total_size

    def label_sets(self) -> list[tuple[int, ...]]:
        """Real edges in label space, in stored order."""
        lab = self.labels
        return [tuple(lab[v] for v in e) for e in self.real_edges()]

    def with_edges(self, edges: Iterable[Iterable[int]], complemented: bool | None = None) -> "Hypergraph":
        flag = self.complemented if complemented is None else complemented
        return Hypergraph(self.n, edges, self.labels, flag)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.labels, self.edges, self.complemented) == (
            other.n, other.labels, other.edges, other.complemented)

    def __hash__(self):
        return hash((self.n, self.labels, self.edges, self.complemented))

    def __repr__(self):
        tag = ", complemented" if self.complemented else ""
        return f"Hypergraph(n={self.n}, m={self.m}, size={self.total_size}{tag})"


def build_bit_matrix(H: Hypergraph) -> BitMatrix:
    return BitMatrix(H.n, [mask_of(e) for e in H.edges])


def should_use_bits(H: Hypergraph) -> bool:
    """Density rule for the ``auto`` bit mode: ``||F|| > n * |F| / 64``."""
    return H.total_size * 64 > H.n * H.m


def resolve_bits(H: Hypergraph, mode: str | bool | None) -> bool:
    if H.complemented:
        # membership in a real edge is only testable through the matrix
        return True
    if mode in (None, "auto"):
        return should_use_bits(H)
    if mode in (True, "on"):
        return True
    if mode in (False, "off"):
        return False
    raise ValueError(f"unknown bit mode {mode!r}")


def complement(H: Hypergraph) -> Hypergraph:
    """Swap between edge and co-edge storage of the same family."""
    full = H.full_mask
    co = [bits_of(full & ~mask_of(e)) for e in H.edges]
    return H.with_edges(co, complemented=not H.complemented)


def remove_superset_edges(H: Hypergraph) -> Hypergraph:
    """Drop every edge that strictly contains another one; order is kept."""
    masks = [H.edge_mask(i) for i in range(H.m)]
    by_size = sorted(range(H.m), key=lambda i: masks[i].bit_count())
    kept: list[int] = []
    keep = [False] * H.m
    for i in by_size:
        mi = masks[i]
        if any(masks[k] & ~mi == 0 for k in kept):
            continue
        kept.append(i)
        keep[i] = True
    return H.with_edges(e for i, e in enumerate(H.edges) if keep[i])


def sort_edges(H: Hypergraph, order: str = "input") -> Hypergraph:
    """Reorder edges; ``size-asc`` sorts by real edge size (stable)."""
    if order == "input":
        return H
    if order != "size-asc":
        raise ValueError(f"unknown edge order {order!r}")
    sizes = [len(e) for e in H.edges]
    if H.complemented:
        sizes = [H.n - s for s in sizes]
    idx = sorted(range(H.m), key=lambda i: sizes[i])
    return H.with_edges(H.edges[i] for i in idx)


def parse_hypergraph(text: str | bytes | IO, coedges: bool = False) -> Hypergraph:
    """Read one hyperedge per line of whitespace-separated labels.

    Blank lines and lines starting with ``#`` are skipped. With ``coedges`` the
    lines are read as complements of the edges.
    """
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    sets = []
    for lineno, line in enumerate(io.StringIO(text), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        edge = []
        for tok in line.split():
            if not tok.isdigit() or not tok.isascii():
                raise ParseError(lineno, f"malformed token {tok!r}")
            edge.append(int(tok))
        if len(set(edge)) != len(edge):
            raise ParseError(lineno, "vertex repeated within a line")
        sets.append(edge)
    return Hypergraph.from_label_sets(sets, complemented=coedges)


def format_sets(sets: Iterable[Sequence[int]], labels: Sequence[int]) -> str:
    lines = []
    for s in sets:
        lines.append(" ".join(str(x) for x in sorted(labels[v] for v in s)))
    return "".join(line + "\n" for line in lines)


def write_sets(sets: Iterable[Sequence[int]], out: IO, labels: Sequence[int]) -> None:
    """Write internal-id sets as label lines. ``out`` may be text or binary."""
    n = len(labels)
    for s in sets:
        for v in s:
            if not 0 <= v < n:
                raise IndexError(f"vertex id {v} out of range")
    text = format_sets(sets, labels)
    if isinstance(out, (io.RawIOBase, io.BufferedIOBase)) or "b" in getattr(out, "mode", ""):
        out.write(text.encode())
    else:
        out.write(text)


def write_hypergraph(H: Hypergraph, out: IO) -> None:
    """Emit the stored edges in label form (co-edges if complemented)."""
    write_sets(H.edges, out, H.labels)
