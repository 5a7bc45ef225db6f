"""Exhaustive search for k-uniform H with EI(H) = C_n at small n.

The search walks the cycle edges {i, i+1} in order 1..n. At the first
cycle edge not yet generated it adds a new k-subset containing that edge,
in lexicographic order; at most two new subsets per cycle edge are ever
needed, and subsets added for the same cycle edge are increasing. Any
chosen set stays pairwise consistent: two hyperedges meet in at most one
vertex or in exactly one cycle edge. A subset of a representation that
still generates every cycle edge is itself a representation, so this walk
finds a witness of at most ``max_edges`` edges whenever one exists.

Pruning rules, each a necessary condition of EI(H) = C_n:

* pairwise consistency, as above;
* every cycle edge still missing must have a new candidate containing it
  that is consistent with everything chosen so far;
* in a representation every vertex has degree >= 3, so the missing degree
  and the missing cycle edges bound the number of edges still to add.

The generating pair of {1, 2} is taken up to the reflection of C_n that
fixes {1, 2}.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .core import Hypergraph, from_mask, mod
from .verification import lower_bound_uniform, verify

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 5_000_000

EXISTS, NOT_EXISTS, BUDGET_EXHAUSTED = "exists", "not_exists", "budget_exhausted"


@dataclass
class SearchOutcome:
    status: str
    nodes_explored: int
    budget: int
    witness: Hypergraph | None = None

    @property
    def exists(self) -> bool:
        return self.status == EXISTS


@dataclass
class MinimumOutcome:
    status: str  # exists (minimum found) | not_exists (no representation at all) | budget_exhausted
    minimum: int | None
    nodes_explored: int
    witness: Hypergraph | None = None
    # largest edge cap proven infeasible before stopping
    refuted_up_to: int | None = None


class _Budget(Exception):
    pass


class _Problem:
    """Candidate k-subsets and their pairwise compatibility, as bitsets."""

    def __init__(self, k: int, n: int):
        self.k, self.n = k, n
        self.cycle = [(1 << i) | (1 << mod(i + 1, n)) for i in range(1, n + 1)]
        self.cycle_index = {m: i for i, m in enumerate(self.cycle)}
        subsets = [sum(1 << v for v in c) for c in combinations(range(1, n + 1), k)]
        # subsets without any cycle edge can never be chosen
        self.cands = [s for s in subsets if any(s & c == c for c in self.cycle)]
        self.index = {m: j for j, m in enumerate(self.cands)}
        self.containing = [[j for j, s in enumerate(self.cands) if s & c == c] for c in self.cycle]
        self.containing_bits = [sum(1 << j for j in js) for js in self.containing]
        self.compat = [self._compat_bits(a) for a in self.cands]

    def compatible(self, a: int, b: int) -> bool:
        x = a & b
        return x.bit_count() <= 1 or x in self.cycle_index

    def _compat_bits(self, a: int) -> int:
        bits = 0
        for j, b in enumerate(self.cands):
            if b != a and self.compatible(a, b):
                bits |= 1 << j
        return bits

    def reflect(self, mask: int) -> int:
        # v -> 3 - v fixes the cycle edge {1, 2}
        out = 0
        for v in from_mask(mask):
            out |= 1 << mod(3 - v, self.n)
        return out

    def root_pairs(self) -> list[tuple[int, int]]:
        """Generating pairs for {1, 2}, one per reflection class, lexicographic."""
        js = self.containing[0]
        pairs = []
        for a, b in combinations(js, 2):
            if not (self.compat[a] >> b) & 1:
                continue
            image = tuple(sorted((self.index[self.reflect(self.cands[a])], self.index[self.reflect(self.cands[b])])))
            if (a, b) <= image:
                pairs.append((a, b))
        return pairs


class _Walker:
    def __init__(self, prob: _Problem, max_edges: int, budget: int):
        self.p = prob
        self.max_edges = max_edges
        self.budget = budget
        self.nodes = 0
        self.chosen: list[int] = []
        self.gen = [0] * prob.n
        self.deg = [0] * (prob.n + 1)
        self.deficit = 3 * prob.n
        self.alive = (1 << len(prob.cands)) - 1

    def add(self, j: int) -> tuple[list[int], int]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Budget
        m = self.p.cands[j]
        touched = []
        for s in self.chosen:
            i = self.p.cycle_index.get(self.p.cands[s] & m)
            if i is not None:
                self.gen[i] += 1
                touched.append(i)
        for v in from_mask(m):
            if self.deg[v] < 3:
                self.deficit -= 1
            self.deg[v] += 1
        self.chosen.append(j)
        old_alive = self.alive
        self.alive &= self.p.compat[j]
        return touched, old_alive

    def remove(self, j: int, undo: tuple[list[int], int]) -> None:
        touched, old_alive = undo
        self.chosen.pop()
        for i in touched:
            self.gen[i] -= 1
        for v in from_mask(self.p.cands[j]):
            self.deg[v] -= 1
            if self.deg[v] < 3:
                self.deficit += 1
        self.alive = old_alive

    def hopeless(self) -> bool:
        missing = [i for i in range(self.p.n) if not self.gen[i]]
        room = self.max_edges - len(self.chosen)
        need = max(-(-len(missing) // (self.p.k - 1)), -(-self.deficit // self.p.k))
        if need > room:
            return True
        return any(not (self.alive & self.p.containing_bits[i]) for i in missing)

    def dfs(self, start: int, last: int) -> bool:
        i = start
        while i < self.p.n and self.gen[i]:
            i += 1
        if i == self.p.n:
            return True
        if i != start:
            last = -1
        if self.hopeless():
            return False
        for j in self.p.containing[i]:
            if j <= last or not (self.alive >> j) & 1:
                continue
            undo = self.add(j)
            if self.dfs(i, j):
                return True
            self.remove(j, undo)
        return False

    def run_root(self, pair: tuple[int, int]) -> bool:
        a, b = pair
        ua = self.add(a)
        ub = self.add(b)
        if self.dfs(0, b):
            return True
        self.remove(b, ub)
        self.remove(a, ua)
        return False


def _run_branch(args: tuple[int, int, int, int, tuple[int, int]]) -> tuple[str, int, list[int] | None]:
    k, n, max_edges, budget, pair = args
    prob = _problem(k, n)
    w = _Walker(prob, max_edges, budget)
    try:
        found = w.run_root(pair)
    except _Budget:
        return BUDGET_EXHAUSTED, budget, None
    if found:
        return EXISTS, w.nodes, [prob.cands[j] for j in w.chosen]
    return NOT_EXISTS, w.nodes, None


_cache: dict[tuple[int, int], _Problem] = {}


def _problem(k: int, n: int) -> _Problem:
    if (k, n) not in _cache:
        _cache[(k, n)] = _Problem(k, n)
    return _cache[(k, n)]


def find_representation(k: int, n: int, max_edges: int, budget: int = DEFAULT_BUDGET,
                        threads: int = 1) -> SearchOutcome:
    """Search for a k-uniform H with at most ``max_edges`` edges and EI(H) = C_n.

    ``budget`` caps the number of hyperedges placed during the walk. The
    outcome is the same for any ``threads``: root branches are replayed in
    order against the budget exactly as a single-threaded run spends it.
    """
    if not 3 <= k < n:
        raise ValueError(f"need 3 <= k < n, got k={k}, n={n}")
    if max_edges < 3:
        raise ValueError(f"need max_edges >= 3, got {max_edges}")
    if budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")
    pairs = _problem(k, n).root_pairs()
    jobs = [(k, n, max_edges, budget, pair) for pair in pairs]

    remaining = budget
    spent = 0
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_run_branch, job) for job in jobs]
            results = (f.result() for f in futures)
            outcome = _replay(results, remaining, budget, n)
            for f in futures:
                f.cancel()
            return outcome
    for pair in pairs:
        status, nodes, masks = _run_branch((k, n, max_edges, remaining, pair))
        if status == BUDGET_EXHAUSTED:
            return SearchOutcome(BUDGET_EXHAUSTED, budget, budget)
        spent += nodes
        remaining -= nodes
        if status == EXISTS:
            return SearchOutcome(EXISTS, spent, budget, _witness(n, masks))
    return SearchOutcome(NOT_EXISTS, spent, budget)


def _replay(results, remaining: int, budget: int, n: int) -> SearchOutcome:
    spent = 0
    for status, nodes, masks in results:
        if status == BUDGET_EXHAUSTED or nodes > remaining:
            return SearchOutcome(BUDGET_EXHAUSTED, budget, budget)
        spent += nodes
        remaining -= nodes
        if status == EXISTS:
            return SearchOutcome(EXISTS, spent, budget, _witness(n, masks))
    return SearchOutcome(NOT_EXISTS, spent, budget)


def _witness(n: int, masks: list[int]) -> Hypergraph:
    h = Hypergraph(n, tuple(sorted(from_mask(m) for m in masks)))
    if not verify(h).is_cycle:
        raise AssertionError(f"search produced an invalid witness {h.edges}")
    return h


def find_minimum(k: int, n: int, budget: int = DEFAULT_BUDGET, threads: int = 1) -> MinimumOutcome:
    """Smallest |E| of a k-uniform H with EI(H) = C_n, by deepening from ceil(3n/k).

    ``budget`` is shared by all deepening rounds. At most 2n edges are ever
    needed (two per cycle edge), so a refutation at 2n means no
    representation exists.
    """
    if not 3 <= k < n:
        raise ValueError(f"need 3 <= k < n, got k={k}, n={n}")
    remaining = budget
    spent = 0
    refuted = None
    for m in range(max(3, lower_bound_uniform(k, n)), 2 * n + 1):
        out = find_representation(k, n, m, remaining, threads)
        if out.status == BUDGET_EXHAUSTED:
            return MinimumOutcome(BUDGET_EXHAUSTED, None, budget, refuted_up_to=refuted)
        spent += out.nodes_explored
        remaining -= out.nodes_explored
        if out.status == EXISTS:
            return MinimumOutcome(EXISTS, len(out.witness), spent, out.witness, refuted)
        refuted = m
        log.debug("k=%d n=%d: no representation with <= %d edges", k, n, m)
    return MinimumOutcome(NOT_EXISTS, None, spent, refuted_up_to=refuted)
