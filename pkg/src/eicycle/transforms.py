"""Checked 6-uniform transforms: odd-vertex insertion and 3-to-6 augmentation.

Both transforms verify their output; a returned hypergraph always has
EI = C_n (for insertion, on the cycle with the new vertex between a and b).
"""
from __future__ import annotations

from itertools import combinations

from .core import Edge, Hypergraph, ei, is_cycle, to_mask


class TransformError(ValueError):
    pass


def _cycle_order_with(m: int, a: int, b: int) -> list[int]:
    """Vertices 1..m in cyclic order with m + 1 inserted between neighbours a and b."""
    u = a if b == a % m + 1 else b
    order = list(range(1, m + 1))
    order.insert(u, m + 1)
    return order


def insert_odd_vertex(h_prime: Hypergraph, a: int, b: int, ex: int, ey: int,
                      standardize: bool = False) -> Hypergraph:
    """Add vertex n = h_prime.n + 1 between the cycle neighbours a and b.

    ``ex`` and ``ey`` index the two hyperedges of ``h_prime`` that generate
    {a, b}. ``ex`` trades b for n, ``ey`` trades a for n, and the triple
    {a, n, b} is added, so {a, n} and {n, b} replace {a, b}.

    With ``standardize`` the result is relabelled along the new cycle so that
    it represents C_n on 1..n in the usual order.
    """
    m = h_prime.n
    if m % 2:
        raise TransformError(f"input must have an even number of vertices, got {m}")
    if not (1 <= a <= m and 1 <= b <= m) or b not in (a % m + 1, (a - 2) % m + 1):
        raise TransformError(f"{a} and {b} are not adjacent on C_{m}")
    ok, _ = is_cycle(ei(h_prime), m)
    if not ok:
        raise TransformError(f"input does not satisfy EI(H') = C_{m}")
    if ex == ey or not (0 <= ex < len(h_prime) and 0 <= ey < len(h_prime)):
        raise TransformError(f"edge indices must be two distinct indices into 0..{len(h_prime) - 1}")
    e_x, e_y = set(h_prime.edges[ex]), set(h_prime.edges[ey])
    if not {a, b} <= e_x or not {a, b} <= e_y:
        raise TransformError(f"edges {ex} and {ey} must both contain {a} and {b}")

    n = m + 1
    edges: list[Edge] = []
    for i, e in enumerate(h_prime.edges):
        if i == ex:
            e = tuple(sorted((e_x - {b}) | {n}))
        elif i == ey:
            e = tuple(sorted((e_y - {a}) | {n}))
        edges.append(e)
    edges.append(tuple(sorted((a, n, b))))
    try:
        out = Hypergraph(n, tuple(edges))
    except ValueError as exc:
        raise TransformError(f"transform produced an invalid hypergraph: {exc}") from exc

    order = _cycle_order_with(m, a, b)
    ok, diff = is_cycle(ei(out), n, order)
    if not ok:
        raise TransformError(f"transformed hypergraph fails verification: missing {diff.missing}, extra {diff.extra}")
    if standardize:
        relabel = {v: i + 1 for i, v in enumerate(order)}
        out = Hypergraph.from_edges(n, [[relabel[v] for v in e] for e in out.edges])
    return out


def augment_to_six(h: Hypergraph, small: Edge) -> Hypergraph:
    """Grow the single 3-vertex hyperedge ``small`` to 6 vertices, keeping EI(h).

    The three added vertices are the lexicographically first triple that
    leaves the edge intersection hypergraph unchanged.
    """
    n = h.n
    small = tuple(sorted(small))
    if small not in h.edges:
        raise TransformError(f"{list(small)} is not a hyperedge of the input")
    if len(small) != 3:
        raise TransformError(f"{list(small)} does not have cardinality 3")
    others = [e for e in h.edges if e != small]
    if any(len(e) != 6 for e in others):
        raise TransformError("all hyperedges other than the small one must have cardinality 6")
    if n < 25 or n % 2 == 0:
        raise TransformError(f"need odd n >= 25, got {n}")
    base = ei(h)
    ok, _ = is_cycle(base, n)
    if not ok:
        raise TransformError(f"input does not satisfy EI(H) = C_{n}")

    other_masks = [to_mask(e) for e in others]
    # intersections among the untouched edges stay as they are
    fixed: set[int] = set()
    for x, y in combinations(other_masks, 2):
        z = x & y
        if z.bit_count() >= 2:
            fixed.add(z)
    target = {to_mask(e) for e in base.edges}
    existing = set(other_masks)
    small_mask = to_mask(small)
    outside = [v for v in range(1, n + 1) if v not in small]
    for triple in combinations(outside, 3):
        grown = small_mask | to_mask(triple)
        if grown in existing:
            continue
        produced = set(fixed)
        for x in other_masks:
            z = grown & x
            if z.bit_count() >= 2:
                produced.add(z)
        if produced == target:
            edges = tuple(tuple(sorted(small + triple)) if e == small else e for e in h.edges)
            out = Hypergraph(n, edges)
            if ei(out).edges != base.edges:
                raise AssertionError("incremental check disagrees with full recomputation")
            return out
    raise TransformError(f"no triple u < v < w extends {list(small)} without changing EI(H)")


def edge_diff(before: Hypergraph, after: Hypergraph) -> tuple[list[Edge], list[Edge]]:
    """Hyperedges removed from and added to ``before``."""
    old, new = set(before.edges), set(after.edges)
    return sorted(old - new), sorted(new - old)

