import numpy as np
import pytest

from limpack.errors import InputError, PreconditionError
from limpack.exact import max_k_limited, min_tuple_dominating
from limpack.generators import gen_named, gen_random_regular
from limpack.graph_core import Graph, is_regular
from limpack.typed import TypedMultigraph
from limpack.verify import (
    Packing, dual_complement, verify_k_limited, verify_tuple_dominating, verify_typed_two_limited,
)
from tests.catalog import random_cubic_graphs


def test_valid_two_limited_packing_on_c6(c6):
    report = verify_k_limited(c6, {0, 1, 3, 4}, 2)
    assert report.valid
    assert report.to_text() == "valid: true\n"


def test_three_vertices_of_h6_violate(h6):
    """Any three vertices of H6 overload some closed neighbourhood"""
    report = verify_k_limited(h6, {0, 2, 4}, 2)
    assert not report.valid
    assert report.violations[0].count == 3
    assert report.to_text().startswith("valid: false\nviolation: vertex ")


def test_violations_sorted_by_vertex(c6):
    report = verify_k_limited(c6, set(range(6)), 1)
    assert [v.vertex for v in report.violations] == list(range(6))
    assert report.violations[0].to_line() == "violation: vertex 0 count 3 limit 1"


def test_out_of_range_vertex(c6):
    with pytest.raises(InputError, match='out of range'):
        verify_k_limited(c6, {6}, 2)


def test_nonpositive_k_rejected(c6):
    with pytest.raises(InputError):
        verify_k_limited(c6, set(), 0)
    with pytest.raises(InputError):
        Packing(0, frozenset())


def test_typed_verifier_reports_c_edge_and_neighbourhood():
    tm = TypedMultigraph.from_edges(4, [(0, 1, 'c'), (1, 2, 'd'), (1, 3, 'd'), (2, 3, 'd')])
    assert verify_typed_two_limited(tm, {0, 2}).valid
    report = verify_typed_two_limited(tm, {0, 1, 2, 3})
    lines = report.to_text().splitlines()
    assert lines[0] == "valid: false"
    assert "violation: cedge 0 1" in lines
    assert "violation: vertex 1 count 3 limit 2" in lines


def test_c_edges_do_not_count_in_d_neighbourhood():
    tm = TypedMultigraph.from_edges(4, [(0, 1, 'c'), (0, 2, 'c'), (0, 3, 'c')])
    assert verify_typed_two_limited(tm, {1, 2, 3}).valid


def test_tuple_domination(petersen):
    assert verify_tuple_dominating(petersen, {0, 7, 8}, 1).valid
    report = verify_tuple_dominating(petersen, {0}, 1)
    assert not report.valid
    assert report.violations[0].limit == 1


def test_dual_complement_requires_regular_graph():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(PreconditionError):
        dual_complement(path, {0}, 1)


def test_dual_complement_range(c6):
    with pytest.raises(InputError):
        dual_complement(c6, {0}, 4)
    assert dual_complement(c6, {0, 3}, 1) == {1, 2, 4, 5}


@pytest.mark.parametrize('k', [1, 2, 3])
def test_duality_on_random_cubic_graphs(k):
    """L_k + γ_{×(4-k)} = n on 3-regular graphs, and complements swap certificates"""
    for g in random_cubic_graphs():
        packing = max_k_limited(g, k)
        dominating = min_tuple_dominating(g, 4 - k)
        assert packing.optimum + dominating.optimum == g.vertex_count
        complement = dual_complement(g, packing.witness, k)
        assert verify_tuple_dominating(g, complement, 4 - k).valid


def test_duality_certificate_direction_on_regular_graph():
    g = gen_random_regular(12, 3, 7)
    dominating = min_tuple_dominating(g, 2)
    packing = dual_complement(g, dominating.witness, 2)
    assert verify_k_limited(g, packing, 2).valid


def _regular_graphs():
    yield gen_named('h6')
    yield gen_named('petersen')
    yield gen_random_regular(12, 4, 3)
    yield from list(random_cubic_graphs())[:6]


def _random_subsets(g, count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield frozenset(np.flatnonzero(rng.random(g.vertex_count) < rng.random()).tolist())


def test_duality_holds_for_random_subsets():
    """X is k-limited exactly when V \\ X is (r+1-k)-tuple dominating"""
    for seed, g in enumerate(_regular_graphs()):
        r = is_regular(g)
        for x in _random_subsets(g, 40, seed):
            complement = dual_complement(g, x, 1)
            for k in range(1, r + 1):
                assert verify_k_limited(g, x, k).valid == verify_tuple_dominating(g, complement, r + 1 - k).valid
            assert verify_k_limited(g, x, r + 1).valid


def test_k_limited_is_monotone_in_k():
    for seed, g in enumerate(_regular_graphs()):
        for x in _random_subsets(g, 40, 100 + seed):
            valid = [verify_k_limited(g, x, k).valid for k in range(1, 6)]
            assert valid == sorted(valid)
