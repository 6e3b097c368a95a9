"""One entry point over every dualization algorithm."""
from __future__ import annotations

import time

from .baselines import enumerate_brute, enumerate_dl
from .dfs import DfsOptions, enumerate_dfs
from .hypergraph import Hypergraph
from .rs import RsOptions, enumerate_rs
from .sink import EnumStats, LimitReached, MhsSink, canonical

ALGORITHMS = ("rs", "dfs", "dl", "brute")


def run(H: Hypergraph, algorithm: str = "rs", sink: MhsSink | None = None, prune: bool = True,
        bits="auto", engine: str = "auto") -> EnumStats:
    """Enumerate the minimal hitting sets of ``H`` into ``sink``."""
    sink = sink if sink is not None else MhsSink()
    if algorithm == "rs":
        return enumerate_rs(H, sink, RsOptions(prune=prune, bits=bits, engine=engine))
    if algorithm == "dfs":
        return enumerate_dfs(H, sink, DfsOptions(prune=prune, bits=bits, engine=engine))
    if algorithm not in ("dl", "brute"):
        raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
    stats = EnumStats(algorithm=algorithm)
    t0 = time.perf_counter()
    if algorithm == "dl":
        sizes = []
        result = enumerate_dl(H, trace=lambda i, d: sizes.append(len(d)))
        stats.nodes = sum(sizes)
    else:
        result = enumerate_brute(H)
        stats.nodes = 1 << H.n
    try:
        for s in result:
            sink.emit(s)
    except LimitReached as exc:
        stats.aborted = str(exc)
    stats.outputs = sink.count
    stats.seconds = time.perf_counter() - t0
    return stats


def dual(H: Hypergraph, algorithm: str = "rs", **kwargs) -> list[tuple[int, ...]]:
    """Canonical dual of ``H`` in internal ids."""
    sink = MhsSink("collect")
    run(H, algorithm, sink, **kwargs)
    return canonical(sink.sets)


def dual_labels(H: Hypergraph, algorithm: str = "rs", **kwargs) -> list[tuple[int, ...]]:
    """Canonical dual of ``H`` in external labels."""
    lab = H.labels
    return canonical(tuple(lab[v] for v in s) for s in dual(H, algorithm, **kwargs))
