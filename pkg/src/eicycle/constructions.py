"""Explicit k-uniform hypergraph families whose edge intersection hypergraph is C_n.

Each builder generates its hyperedges from closed-form index ranges, in
family order and ascending index within a family. Vertices are reduced
modulo n before storage.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .core import Hypergraph


class RangeError(ValueError):
    """n lies outside the domain of a construction."""


VARIANTS = ("k3", "k4-thm5", "k4-thm6", "k5-lemma-32", "k5-thm9")

ALIASES = {
    "thm3": "k3",
    "thm5": "k4-thm5",
    "thm6": "k4-thm6",
    "lemma-32": "k5-lemma-32",
    "thm8": "k5-lemma-32",
    "thm9": "k5-thm9",
}

VARIANT_K = {"k3": 3, "k4-thm5": 4, "k4-thm6": 4, "k5-lemma-32": 5, "k5-thm9": 5}


@dataclass(frozen=True)
class ConstructionSpec:
    k: int
    n: int
    variant: str

    def __post_init__(self) -> None:
        variant = ALIASES.get(self.variant, self.variant)
        if variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; choose from {', '.join(VARIANTS)}")
        if VARIANT_K[variant] != self.k:
            raise ValueError(f"variant {variant} builds {VARIANT_K[variant]}-uniform hypergraphs, not k={self.k}")
        object.__setattr__(self, "variant", variant)


def _hg(n: int, families: list[list[list[int]]]) -> Hypergraph:
    return Hypergraph.from_edges(n, [e for fam in families for e in fam])


def build_k3(n: int) -> Hypergraph:
    """n triples {i, i+1, i+2}; 3-regular."""
    if n < 5:
        raise RangeError(f"n out of range for variant k3: need n >= 5, got {n}")
    return _hg(n, [[[i, i + 1, i + 2] for i in range(1, n + 1)]])


def build_k4_n_edges(n: int) -> Hypergraph:
    """n quadruples {i, i+1, i+2, i+5}."""
    if n < 11:
        raise RangeError(
            f"n out of range for variant k4-thm5: a 4-uniform H with EI(H) = C_n needs n >= 11, got {n}"
        )
    return _hg(n, [[[i, i + 1, i + 2, i + 5] for i in range(1, n + 1)]])


def build_k4_minimal(n: int) -> Hypergraph:
    """ceil(3n/4) quadruples: 4-sections on odd starts, (2,2) chords, per-residue extras."""
    if n < 12:
        raise RangeError(f"n out of range for variant k4-thm6: need n >= 12, got {n}")
    r = n % 4
    if r == 0:
        h = n // 2
        fours = [[i, i + 1, i + 2, i + 3] for i in range(1, n, 2)]
        chords = [[i, i + 1, h + i, h + i + 1] for i in range(2, h + 1, 2)]
        extra: list[list[int]] = []
    elif r == 1:
        h = (n - 1) // 2
        fours = [[i, i + 1, i + 2, i + 3] for i in range(1, n - 1, 2)]
        chords = [[i, i + 1, h + i, h + i + 1] for i in range(2, h + 1, 2)]
        extra = [[n, 1, 2, 5]]
    elif r == 2:
        h = n // 2
        fours = [[i, i + 1, i + 2, i + 3] for i in range(1, n, 2)]
        chords = [[i, i + 1, h + i - 1, h + i] for i in range(2, h, 2)]
        extra = [[n, 1, h + 1, h + 2]]
    else:
        h = (n - 1) // 2
        fours = [[i, i + 1, i + 2, i + 3] for i in range(1, n - 1, 2)]
        chords = [[i, i + 1, h + i - 1, h + i] for i in range(2, h, 2)]
        extra = [[n - 1, n, h + 1, h + 2], [n, 1, 2, 5]]
    return _hg(n, [fours, chords, extra])


N18_EDGES = [
    [1, 2, 3, 7, 8], [4, 5, 6, 12, 13], [7, 8, 9, 13, 14], [10, 11, 12, 18, 1],
    [13, 14, 15, 1, 2], [16, 17, 18, 6, 7],
    [2, 3, 4, 9, 10], [5, 6, 7, 10, 11], [8, 9, 10, 15, 16], [11, 12, 13, 16, 17],
    [14, 15, 16, 3, 4], [17, 18, 1, 4, 5],
]


def _lemma_extras_1mod3(n: int) -> list[list[int]]:
    return [
        [n - 12, n - 11, n - 10, n - 6, n - 5],
        [n - 11, n - 10, n - 9, n - 4, n - 3],
        [n - 9, n - 8, n - 7, n - 1, n],
        [n - 8, n - 7, n - 6, n - 3, n - 2],
        [n - 6, n - 5, n - 4, n, 1],
        [n - 5, n - 4, n - 3, 3, 4],
        [n - 3, n - 2, n - 1, 6, 7],
        [n - 2, n - 1, n, 1, 2],
        [4, 5, 9, n - 1, n],
    ]


def _lemma_extras_2mod3(n: int) -> list[list[int]]:
    return [
        [n - 13, n - 12, n - 11, n - 7, n - 6],
        [n - 12, n - 11, n - 10, n - 5, n - 4],
        [n - 10, n - 9, n - 8, n - 1, n],
        [n - 9, n - 8, n - 7, n - 4, n - 3],
        [n - 7, n - 6, n - 5, n, 1],
        [n - 6, n - 5, n - 4, 3, 4],
        [n - 4, n - 3, n - 2, 6, 7],
        [n - 3, n - 2, n - 1, 4, 5],
        [n - 2, n - 1, n, 1, 2],
    ]


def build_k5_32(n: int) -> Hypergraph:
    """5-uniform family built mostly from (3,2)-hyperedges.

    Edge counts: 2n/3 for n = 0 mod 3, 2(n-1)/3 + 1 for n = 1 mod 3 and
    2(n-2)/3 + 1 for n = 2 mod 3.
    """
    if n < 18:
        raise RangeError(f"n out of range for variant k5-lemma-32: need n >= 18, got {n}")
    r = n % 3
    if r == 0 and n == 18:
        return Hypergraph.from_edges(n, N18_EDGES)
    # upper ends of the two (3,2) families
    last_a, last_b = {0: (n - 2, n - 1), 1: (n - 15, n - 14), 2: (n - 16, n - 15)}[r]
    fam_a = [[i, i + 1, i + 2, i + 8, i + 9] for i in range(1, last_a + 1, 3)]
    fam_b = [[i, i + 1, i + 2, i + 5, i + 6] for i in range(2, last_b + 1, 3)]
    extras = {0: [], 1: _lemma_extras_1mod3(n), 2: _lemma_extras_2mod3(n)}[r]
    return _hg(n, [fam_a, fam_b, extras])


def build_k5_minimal(n: int) -> Hypergraph:
    """3n/5 hyperedges: n/5 (5)-hyperedges and 2n/5 (3,2)-hyperedges; 3-regular."""
    if n < 20 or n % 5:
        raise RangeError(f"n out of range for variant k5-thm9: need n >= 20 and n = 0 mod 5, got {n}")
    fives = [[i, i + 1, i + 2, i + 3, i + 4] for i in range(1, n - 3, 5)]
    back = [[i, i + 1, i + 2, i - 6, i - 5] for i in range(4, n, 5)]
    ahead = [[i, i + 1, i + 2, i + 7, i + 8] for i in range(5, n + 1, 5)]
    return _hg(n, [fives, back, ahead])


BUILDERS = {
    "k3": build_k3,
    "k4-thm5": build_k4_n_edges,
    "k4-thm6": build_k4_minimal,
    "k5-lemma-32": build_k5_32,
    "k5-thm9": build_k5_minimal,
}

MIN_N = {"k3": 5, "k4-thm5": 11, "k4-thm6": 12, "k5-lemma-32": 18, "k5-thm9": 20}


def in_domain(variant: str, n: int) -> bool:
    variant = ALIASES.get(variant, variant)
    return n >= MIN_N[variant] and (variant != "k5-thm9" or n % 5 == 0)


def expected_edge_count(variant: str, n: int) -> int:
    """Edge count each family is stated to have."""
    variant = ALIASES.get(variant, variant)
    if variant in ("k3", "k4-thm5"):
        return n
    if variant == "k4-thm6":
        return ceil(3 * n / 4)
    if variant == "k5-thm9":
        return 3 * n // 5
    r = n % 3
    return 2 * (n - r) // 3 + (r != 0)


def default_variant(k: int, n: int) -> str:
    """Family with the fewest edges available for (k, n)."""
    if k == 3:
        return "k3"
    if k == 4:
        return "k4-thm6" if n >= 12 else "k4-thm5"
    if k == 5:
        return "k5-thm9" if n >= 20 and n % 5 == 0 else "k5-lemma-32"
    raise ValueError(f"no construction for k={k}; supported k are 3, 4, 5")


def build(spec: ConstructionSpec) -> Hypergraph:
    return BUILDERS[spec.variant](spec.n)
