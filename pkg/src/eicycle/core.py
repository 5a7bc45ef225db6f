"""Hypergraphs on the vertex set 1..n and their edge intersection hypergraphs.

Vertices are labelled 1..n and all vertex arithmetic is taken modulo n with 0
mapped to n, so ``mod(n + 1, n) == 1`` and ``mod(0, n) == n``.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

Edge = tuple[int, ...]


class HypergraphError(ValueError):
    """Raised for malformed hypergraphs (bad vertices, loops, multi-edges)."""


def mod(v: int, n: int) -> int:
    """Canonical representative of ``v`` in 1..n."""
    return (v - 1) % n + 1


def successor(v: int, n: int) -> int:
    return mod(v + 1, n)


def predecessor(v: int, n: int) -> int:
    return mod(v - 1, n)


def make_edge(vertices: Iterable[int], n: int | None = None) -> Edge:
    """Sorted tuple of vertices, reduced modulo ``n`` when given."""
    vs = [mod(v, n) for v in vertices] if n is not None else list(vertices)
    if len(set(vs)) != len(vs):
        raise HypergraphError(f"hyperedge {sorted(vs)} repeats a vertex")
    return tuple(sorted(vs))


def to_mask(edge: Iterable[int]) -> int:
    m = 0
    for v in edge:
        m |= 1 << v
    return m


def from_mask(mask: int) -> Edge:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A hypergraph on vertices 1..n without loops or multiple edges.

    ``edges`` keeps the order it was built in (constructions emit their
    formula families in order); equality and hashing ignore that order.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise HypergraphError(f"n must be positive, got {self.n}")
        normalized = []
        for e in self.edges:
            e = tuple(sorted(e))
            if len(set(e)) != len(e):
                raise HypergraphError(f"hyperedge {list(e)} repeats a vertex")
            if len(e) < 2:
                raise HypergraphError(f"hyperedge {list(e)} has fewer than 2 vertices")
            if e[0] < 1 or e[-1] > self.n:
                raise HypergraphError(f"hyperedge {list(e)} has a vertex outside 1..{self.n}")
            normalized.append(e)
        if len(set(normalized)) != len(normalized):
            dup = next(e for e, c in Counter(normalized).items() if c > 1)
            raise HypergraphError(f"hyperedge {list(dup)} occurs more than once")
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
        """Build from raw vertex lists, reducing every vertex modulo ``n``."""
        return cls(n, tuple(make_edge(e, n) for e in edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and frozenset(self.edges) == frozenset(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges)))

    def __len__(self) -> int:
        return len(self.edges)

    def canonical(self) -> Hypergraph:
        """Same hypergraph with edges in lexicographic order."""
        return Hypergraph(self.n, tuple(sorted(self.edges)))

    def uniformity(self) -> int | None:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def masks(self) -> list[int]:
        return [to_mask(e) for e in self.edges]

    def to_dict(self, canonical: bool = False) -> dict:
        edges = sorted(self.edges) if canonical else self.edges
        return {"n": self.n, "edges": [list(e) for e in edges]}

    def to_json(self, canonical: bool = False) -> str:
        return json.dumps(self.to_dict(canonical))

    @classmethod
    def from_dict(cls, data: dict) -> Hypergraph:
        try:
            n = data["n"]
            edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise HypergraphError('expected an object with keys "n" and "edges"') from exc
        if not isinstance(n, int) or isinstance(n, bool):
            raise HypergraphError(f'"n" must be an integer, got {n!r}')
        if not isinstance(edges, list) or not all(
            isinstance(e, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in e)
            for e in edges
        ):
            raise HypergraphError('"edges" must be a list of integer lists')
        return cls(n, tuple(tuple(e) for e in edges))

    @classmethod
    def from_json(cls, text: str) -> Hypergraph:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise HypergraphError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)


def load(path: str | Path) -> Hypergraph:
    return Hypergraph.from_json(Path(path).read_text())


def dump(h: Hypergraph, path: str | Path, canonical: bool = False) -> None:
    Path(path).write_text(h.to_json(canonical) + "\n")


@dataclass(frozen=True)
class EiResult:
    """Edge set of EI(H) plus, per edge, the number of unordered generating pairs."""

    edges: frozenset[Edge]
    multiplicity: dict[Edge, int] = field(default_factory=dict)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def ei(h: Hypergraph, mathematica_variant: bool = False) -> EiResult:
    """Edge intersection hypergraph of ``h``.

    The default is the set definition: all intersections of two distinct
    hyperedges with at least two vertices. With ``mathematica_variant`` the
    intersections that coincide with a hyperedge of ``h`` are dropped as
    well; for uniform ``h`` both agree.
    """
    masks = h.masks()
    counts: Counter[int] = Counter()
    for a, b in combinations(masks, 2):
        x = a & b
        if x.bit_count() >= 2:
            counts[x] += 1
    if mathematica_variant:
        for m in masks:
            counts.pop(m, None)
    mult = {from_mask(m): c for m, c in sorted(counts.items())}
    return EiResult(frozenset(mult), mult)


def cycle_edges(n: int, order: Sequence[int] | None = None) -> set[Edge]:
    """Edges of the cycle on 1..n, or on the given cyclic vertex ``order``."""
    if order is None:
        order = range(1, n + 1)
    order = list(order)
    return {tuple(sorted((order[i], order[(i + 1) % len(order)]))) for i in range(len(order))}


@dataclass(frozen=True)
class CycleDiff:
    missing: list[Edge]
    extra: list[Edge]

    def __bool__(self) -> bool:
        return bool(self.missing or self.extra)


def is_cycle(r: EiResult, n: int, order: Sequence[int] | None = None) -> tuple[bool, CycleDiff]:
    """Whether ``r`` is exactly C_n; the diff lists missing and extra edges."""
    if n < 3:
        raise ValueError(f"a cycle needs n >= 3, got {n}")
    target = cycle_edges(n, order)
    missing = sorted(target - r.edges)
    extra = sorted(r.edges - target)
    diff = CycleDiff(missing, extra)
    return not diff, diff


def degrees(h: Hypergraph) -> dict[int, int]:
    d = dict.fromkeys(range(1, h.n + 1), 0)
    for e in h.edges:
        for v in e:
            d[v] += 1
    return d


def generating_pairs(h: Hypergraph, target: Iterable[int]) -> list[tuple[int, int]]:
    """Index pairs (i, j), i < j, of hyperedges whose intersection is exactly ``target``."""
    t = to_mask(target)
    masks = h.masks()
    return [(i, j) for i, j in combinations(range(len(masks)), 2) if masks[i] & masks[j] == t]
