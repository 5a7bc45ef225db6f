from itertools import combinations

import pytest

from eicycle.constructions import build_k3, build_k4_minimal
from eicycle.core import to_mask
from eicycle.search import (
    BUDGET_EXHAUSTED,
    EXISTS,
    NOT_EXISTS,
    find_minimum,
    find_representation,
)
from eicycle.verification import verify


def brute_force_minimum(k, n, max_edges):
    """Smallest family of k-subsets whose pairwise intersections (size >= 2) are exactly C_n.

    Plain enumeration of every family, smallest first; no pruning or symmetry.
    """
    cands = [to_mask(c) for c in combinations(range(1, n + 1), k)]
    target = {to_mask((i, i % n + 1)) for i in range(1, n + 1)}
    for size in range(1, max_edges + 1):
        for fam in combinations(cands, size):
            inter = set()
            for x, y in combinations(fam, 2):
                z = x & y
                if z.bit_count() >= 2:
                    inter.add(z)
            if inter == target:
                return size
    return None


class TestExamples:
    def test_k3_n5_exists(self):
        out = find_representation(3, 5, 5)
        assert out.status == EXISTS and out.exists
        assert len(out.witness) == 5
        assert verify(out.witness).is_cycle

    def test_k4_n7_not_exists(self):
        assert find_representation(4, 7, 21).status == NOT_EXISTS

    def test_k4_n11_exists(self):
        out = find_representation(4, 11, 11)
        assert out.status == EXISTS
        assert len(out.witness) <= 11 and verify(out.witness).is_cycle

    @pytest.mark.parametrize("k, n, minimum", [(3, 5, 5), (3, 6, 6), (4, 12, 9)])
    def test_find_minimum(self, k, n, minimum):
        out = find_minimum(k, n)
        assert out.status == EXISTS and out.minimum == minimum
        assert verify(out.witness).is_cycle and out.witness.uniformity() == k


class TestAgainstBruteForce:
    @pytest.mark.parametrize("k, n, cap", [(3, 4, 4), (3, 5, 6), (3, 6, 6), (4, 5, 5), (4, 6, 7), (3, 7, 5)])
    def test_minimum_agrees(self, k, n, cap):
        expected = brute_force_minimum(k, n, cap)
        got = find_representation(k, n, cap)
        assert got.exists == (expected is not None)
        if expected is not None:
            assert find_minimum(k, n).minimum == expected

    def test_k3_n7_minimum(self):
        assert brute_force_minimum(3, 7, 7) == 7
        assert find_minimum(3, 7).minimum == 7


class TestCompleteness:
    @pytest.mark.parametrize("n", [5, 6, 7, 8])
    def test_k4_small_n_has_no_representation(self, n):
        out = find_representation(4, n, 2 * n)
        assert out.status == NOT_EXISTS

    @pytest.mark.parametrize("n", [9, 10])
    def test_k4_n9_n10(self, n):
        assert find_representation(4, n, 2 * n).status == NOT_EXISTS

    def test_minimum_not_exists(self):
        out = find_minimum(4, 7)
        assert out.status == NOT_EXISTS and out.minimum is None
        assert out.refuted_up_to == 14

    def test_certified_constructions_match_search(self):
        # a 3-regular k-uniform representation is minimum; the search must agree
        assert find_minimum(3, 8).minimum == len(build_k3(8))
        assert find_minimum(4, 12).minimum == len(build_k4_minimal(12))


class TestBudgetAndThreads:
    def test_budget_exhausted(self):
        out = find_representation(4, 8, 16, budget=10)
        assert out.status == BUDGET_EXHAUSTED and out.witness is None

    def test_zero_budget(self):
        assert find_representation(3, 5, 5, budget=0).status == BUDGET_EXHAUSTED

    def test_minimum_budget_exhausted(self):
        out = find_minimum(4, 12, budget=50)
        assert out.status == BUDGET_EXHAUSTED and out.minimum is None

    @pytest.mark.parametrize("k, n, cap", [(4, 7, 14), (4, 11, 11), (3, 6, 6)])
    def test_threads_do_not_change_status(self, k, n, cap):
        serial = find_representation(k, n, cap)
        parallel = find_representation(k, n, cap, threads=2)
        assert serial.status == parallel.status
        if serial.exists:
            assert verify(parallel.witness).is_cycle

    def test_threads_respect_budget(self):
        serial = find_representation(4, 8, 16, budget=500)
        parallel = find_representation(4, 8, 16, budget=500, threads=2)
        assert serial.status == parallel.status


class TestParameters:
    @pytest.mark.parametrize("k, n", [(2, 5), (5, 5), (6, 5)])
    def test_bad_k(self, k, n):
        with pytest.raises(ValueError, match="3 <= k < n"):
            find_representation(k, n, 10)

    def test_bad_max_edges(self):
        with pytest.raises(ValueError, match="max_edges >= 3"):
            find_representation(3, 5, 2)

    def test_bad_budget(self):
        with pytest.raises(ValueError, match="non-negative"):
            find_representation(3, 5, 5, budget=-1)
