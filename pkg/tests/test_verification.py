import json

import pytest

from eicycle.constructions import BUILDERS, build_k4_minimal, build_k5_32, build_k5_minimal, in_domain
from eicycle.core import Hypergraph
from eicycle.verification import lower_bound_32_only, lower_bound_uniform, verify


def test_case0_n12_certified():
    r = verify(build_k4_minimal(12))
    assert r.is_cycle and r.is_3_regular and r.minimality_certified
    assert r.edge_count == 9 == r.lower_bound_general


def test_case2_n14_triply_generated():
    r = verify(build_k4_minimal(14))
    assert r.is_cycle
    assert r.multiplicity[(8, 9)] == 3
    assert not r.is_3_regular and not r.minimality_certified
    assert r.meets_lower_bound


def test_thm9_n20_certified():
    r = verify(build_k5_minimal(20))
    assert r.minimality_certified and r.edge_count == 12


def test_case1_meets_bound_without_certificate():
    r = verify(build_k4_minimal(13))
    assert r.is_cycle and r.meets_lower_bound and not r.minimality_certified


def test_failure_report():
    h = Hypergraph(5, ((1, 2, 3), (2, 3, 4)))
    r = verify(h)
    assert not r.is_cycle and not r.minimality_certified
    assert r.extra_edges == [] and (1, 2) in r.missing_edges
    assert "NO" in r.render()


def test_3_regular_but_not_cycle_is_not_certified():
    # the Fano plane: 3-regular, 3-uniform, pairwise intersections are single points
    fano = Hypergraph(7, ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)))
    r = verify(fano)
    assert r.is_3_regular and not r.is_cycle and not r.minimality_certified


def test_report_serializes():
    data = json.loads(json.dumps(verify(build_k5_32(19)).to_dict()))
    assert data["is_cycle"] and data["edge_count"] == 13 and data["lower_bound_32"] == 13


@pytest.mark.parametrize("k, n, bound", [(4, 12, 9), (6, 24, 12), (3, 5, 5), (5, 21, 13), (4, 13, 10)])
def test_lower_bound_uniform(k, n, bound):
    assert lower_bound_uniform(k, n) == bound


@pytest.mark.parametrize("n, bound", [(18, 12), (19, 13), (3, 2), (20, 14)])
def test_lower_bound_32(n, bound):
    assert lower_bound_32_only(n) == bound


@pytest.mark.parametrize("variant", sorted(BUILDERS))
def test_report_invariants_on_constructions(variant):
    for n in range(3, 90):
        if not in_domain(variant, n):
            continue
        r = verify(BUILDERS[variant](n))
        assert r.is_cycle
        assert r.min_degree >= 3
        assert r.edge_count >= r.lower_bound_general
        if r.minimality_certified:
            assert r.is_cycle and r.is_k_uniform and r.is_3_regular
        if r.all_32:
            assert r.edge_count >= r.lower_bound_32
            assert n % 3 != 0 or r.edge_count == r.lower_bound_32


def test_all_32_only_for_lemma1():
    assert verify(build_k5_32(21)).all_32
    assert not verify(build_k5_32(22)).all_32
