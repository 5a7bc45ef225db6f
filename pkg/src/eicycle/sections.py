"""Circular runs of a hyperedge on C_n and the resulting (l1, ..., lt) profiles."""
from __future__ import annotations

from typing import Iterable, NamedTuple

from .core import Edge, Hypergraph, mod


class Run(NamedTuple):
    start: int
    length: int

    def vertices(self, n: int) -> list[int]:
        return [mod(self.start + j, n) for j in range(self.length)]


def sections(e: Iterable[int], n: int) -> list[Run]:
    """Maximal runs of consecutive cycle vertices inside ``e``."""
    vs = set(e)
    if len(vs) >= n:
        raise ValueError("full-cycle hyperedge has no section decomposition")
    if not vs:
        return []
    if min(vs) < 1 or max(vs) > n:
        raise ValueError(f"vertex outside 1..{n} in {sorted(vs)}")
    runs = []
    for v in sorted(vs):
        if mod(v - 1, n) in vs:
            continue
        length = 1
        while mod(v + length, n) in vs:
            length += 1
        runs.append(Run(v, length))
    # a run wrapping through n -> 1 is ordered as if it started at start - n
    runs.sort(key=lambda r: r.start - n if r.start + r.length - 1 > n else r.start)
    return runs


def profile(e: Iterable[int], n: int) -> tuple[int, ...]:
    return tuple(sorted((r.length for r in sections(e, n)), reverse=True))


def half_edge_capacity(p: Iterable[int]) -> int:
    """How many cycle edges a hyperedge with section lengths ``p`` can help generate."""
    p = tuple(p)
    if not p or any(l < 1 for l in p):
        raise ValueError(f"invalid profile {p}")
    return sum(l - 1 for l in p)


def format_profile(p: Iterable[int]) -> str:
    return "(" + ",".join(str(l) for l in p) + ")"


def census(h: Hypergraph) -> dict[tuple[int, ...], int]:
    """Number of hyperedges per profile, most frequent first."""
    counts: dict[tuple[int, ...], int] = {}
    for e in h.edges:
        p = profile(e, h.n)
        counts[p] = counts.get(p, 0) + 1
    return dict(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


def profiles(h: Hypergraph) -> list[tuple[Edge, tuple[int, ...]]]:
    return [(e, profile(e, h.n)) for e in h.edges]
