"""Benchmark hypergraph families with known dual sizes, plus random instances.

All families use labels ``1..n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .hypergraph import Hypergraph

DM_MAX_N = 40
SDFP_MAX_K = 5

FANO_LINES = ((1, 2, 3), (1, 5, 6), (1, 7, 4), (2, 4, 5), (2, 6, 7), (3, 4, 6), (3, 5, 7))

FAMILIES = ("M", "DM", "TH", "SDTH", "SDFP", "RANDOM")


def _even(n: int, family: str, low: int = 2) -> None:
    if n < low or n % 2:
        raise ValueError(f"{family} needs an even n >= {low}, got {n}")


def matching_edges(n: int) -> list[tuple[int, ...]]:
    _even(n, "M")
    return [(2 * i - 1, 2 * i) for i in range(1, n // 2 + 1)]


def dual_matching_edges(n: int) -> list[tuple[int, ...]]:
    _even(n, "DM")
    if n > DM_MAX_N:
        raise ValueError(f"DM({n}) would have 2^{n // 2} edges; limit is n <= {DM_MAX_N}")
    return [tuple(pick) for pick in product(*matching_edges(n))]


def threshold_edges(n: int) -> list[tuple[int, ...]]:
    _even(n, "TH")
    return [(i, j) for j in range(2, n + 1, 2) for i in range(1, j)]


def threshold_dual_edges(n: int) -> list[tuple[int, ...]]:
    """Minimal vertex covers of TH(n), built directly.

    The even vertices form a clique and each odd vertex sees the evens above
    it, so a minimal cover is either all evens, or all evens but ``2k`` plus
    every vertex below ``2k``.
    """
    _even(n, "TH")
    evens = list(range(2, n + 1, 2))
    out = [tuple(evens)]
    for k in range(1, n // 2 + 1):
        skip = 2 * k
        out.append(tuple(sorted({v for v in evens if v != skip} | set(range(1, skip, 2)))))
    return out


def self_dualize(edges, dual_edges, a: int, b: int) -> list[tuple[int, ...]]:
    """``{a,b}`` plus ``a`` joined to each edge plus ``b`` joined to each dual edge."""
    out = [(a, b)]
    out += [tuple(sorted((a,) + tuple(e))) for e in edges]
    out += [tuple(sorted((b,) + tuple(d))) for d in dual_edges]
    return out


def sd_threshold_edges(n: int) -> list[tuple[int, ...]]:
    _even(n, "SDTH", low=4)
    return self_dualize(threshold_edges(n - 2), threshold_dual_edges(n - 2), n - 1, n)


def fano_copies(k: int) -> list[list[tuple[int, ...]]]:
    return [[tuple(x + 7 * c for x in line) for line in FANO_LINES] for c in range(k)]


def sd_fano_edges(n: int) -> list[tuple[int, ...]]:
    if n < 9 or (n - 2) % 7:
        raise ValueError(f"SDFP needs n = 7k + 2 with k >= 1, got {n}")
    k = (n - 2) // 7
    if k > SDFP_MAX_K:
        raise ValueError(f"SDFP({n}) would have 7^{k} dual edges; limit is k <= {SDFP_MAX_K}")
    copies = fano_copies(k)
    primal = [line for copy in copies for line in copy]
    # the Fano lines are their own dual, so the dual of k disjoint copies
    # is every union of one line per copy
    dual = [tuple(sorted(x for line in pick for x in line)) for pick in product(*copies)]
    return self_dualize(primal, dual, n - 1, n)


def gen_matching(n: int) -> Hypergraph:
    return Hypergraph.from_label_sets(matching_edges(n))


def gen_dual_matching(n: int) -> Hypergraph:
    return Hypergraph.from_label_sets(dual_matching_edges(n))


def gen_threshold(n: int) -> Hypergraph:
    return Hypergraph.from_label_sets(threshold_edges(n))


def gen_sd_threshold(n: int) -> Hypergraph:
    return Hypergraph.from_label_sets(sd_threshold_edges(n))


def gen_sd_fano(n: int) -> Hypergraph:
    return Hypergraph.from_label_sets(sd_fano_edges(n))


MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64; ``random()`` maps the top 53 bits of each output to [0, 1)."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))


def random_edges(n: int, m: int, p: float, seed: int) -> list[tuple[int, ...]]:
    """Draw ``m`` edges; vertex ``i`` (1..n) joins with probability ``p``.

    Each edge draws one value per vertex in order 1..n; an empty draw is
    replaced by a fresh draw from the same stream. Duplicates are kept here
    and dropped when the hypergraph is built.
    """
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    rng = SplitMix64(seed)
    out = []
    while len(out) < m:
        edge = tuple(i for i in range(1, n + 1) if rng.random() < p)
        if edge:
            out.append(edge)
    return out


def gen_random(n: int, m: int, p: float, seed: int = 0) -> Hypergraph:
    return Hypergraph.from_label_sets(random_edges(n, m, p, seed))


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    n: int
    m: int | None = None
    p: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "RANDOM" and (self.m is None or self.p is None):
            raise ValueError("RANDOM needs n, m and p")

    @classmethod
    def parse(cls, text: str) -> "InstanceSpec":
        """Read ``FAMILY:n`` or ``RANDOM:n:m:p[:seed]`` (spaces also accepted)."""
        parts = text.replace(":", " ").split()
        if not parts:
            raise ValueError("empty instance spec")
        family = parts[0].upper()
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
        try:
            if family == "RANDOM":
                if len(parts) not in (4, 5):
                    raise ValueError
                seed = int(parts[4]) if len(parts) == 5 else 0
                return cls(family, int(parts[1]), int(parts[2]), float(parts[3]), seed)
            if len(parts) != 2:
                raise ValueError
            return cls(family, int(parts[1]))
        except ValueError:
            raise ValueError(f"bad instance spec {text!r}") from None

    @property
    def name(self) -> str:
        if self.family == "RANDOM":
            return f"RANDOM({self.n},{self.m},{self.p},{self.seed})"
        return f"{self.family}({self.n})"

    def build(self) -> Hypergraph:
        return generate(self)


def generate(spec: InstanceSpec) -> Hypergraph:
    f = spec.family
    if f == "M":
        return gen_matching(spec.n)
    if f == "DM":
        return gen_dual_matching(spec.n)
    if f == "TH":
        return gen_threshold(spec.n)
    if f == "SDTH":
        return gen_sd_threshold(spec.n)
    if f == "SDFP":
        return gen_sd_fano(spec.n)
    return gen_random(spec.n, spec.m, spec.p, spec.seed)
