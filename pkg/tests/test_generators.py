import itertools

import pytest

from limpack.errors import InputError, ResourceLimitError
from limpack.exact import max_k_limited
from limpack.fields import FieldElement, ProjectivePoint, get_field, projective_points
from limpack.generators import (
    copies, gen_cycle, gen_named, gen_projective, gen_random_regular, gen_random_typed,
)
from limpack.graph_core import closed_neighborhood, connected_components, degree_stats, is_regular
from limpack.greedy import greedy_packing
from limpack.verify import verify_k_limited
from tests.catalog import connected_subcubic_by_size, max_degree_three_graphs


def test_cycle():
    g = gen_cycle(7)
    assert is_regular(g) == 2
    assert g.edge_count == 7
    with pytest.raises(InputError):
        gen_cycle(2)


@pytest.mark.parametrize('family, n, r', [('h6', 6, 3), ('petersen', 10, 3), ('k4', 4, 3)])
def test_named_families_are_cubic(family, n, r):
    g = gen_named(family)
    assert g.vertex_count == n
    assert is_regular(g) == r


def test_unknown_family():
    with pytest.raises(InputError, match='petersen'):
        gen_named('heawood')


def test_copies(h6):
    assert copies(h6, 3).vertex_count == 18
    with pytest.raises(InputError):
        copies(h6, 0)


@pytest.mark.parametrize('n, r', [(10, 3), (20, 4), (50, 6), (200, 10)])
def test_random_regular_is_simple_and_regular(n, r):
    g = gen_random_regular(n, r, seed=3)
    assert g.vertex_count == n
    assert is_regular(g) == r
    assert g == gen_random_regular(n, r, seed=3)


@pytest.mark.parametrize('n, r', [(5, 3), (4, 4), (-2, 3)])
def test_random_regular_rejects_impossible_parameters(n, r):
    with pytest.raises(InputError):
        gen_random_regular(n, r, seed=0)


def test_random_regular_attempt_limit():
    with pytest.raises(ResourceLimitError):
        gen_random_regular(10, 3, seed=0, max_attempts=0)


def test_low_degree_regular_graphs_are_uniform():
    """Labelled 2-regular graphs on 6 vertices: 60 hexagons, 10 triangle pairs"""
    split = sum(len(connected_components(gen_random_regular(6, 2, seed))) == 2 for seed in range(700))
    assert abs(split / 700 - 1 / 7) < 0.05


@pytest.mark.parametrize('q, k, n, hyperplane', [(2, 1, 7, 3), (3, 1, 13, 4), (2, 2, 15, 7)])
def test_projective_graphs(q, k, n, hyperplane):
    """Isotropic points have one neighbour fewer than the hyperplane size"""
    g = gen_projective(q, k)
    assert g.vertex_count == n
    points = projective_points(k + 2, q)
    for v in g.vertices:
        expected = hyperplane - 1 if points[v].is_isotropic() else hyperplane
        assert g.degree(v) == expected
    assert max_k_limited(g, k).optimum == k


@pytest.mark.parametrize('q, k', [(2, 1), (3, 1), (2, 2)])
def test_every_k_plus_one_points_share_a_hyperplane(q, k):
    """Any k+1 vertices lie in some closed neighbourhood, so L_k ≤ k"""
    g = gen_projective(q, k)
    blocks = [closed_neighborhood(g, v) for v in g.vertices]
    for subset in itertools.combinations(g.vertices, k + 1):
        assert any(set(subset) <= block for block in blocks)


def test_projective_needs_positive_k():
    with pytest.raises(InputError):
        gen_projective(2, 0)


@pytest.mark.parametrize('q', [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms(q):
    field = get_field(q)
    for a in range(1, q):
        assert field.mul(a, field.inv(a)) == 1
        assert field.add(a, field.neg(a)) == 0
    for a, b, c in itertools.product(range(q), repeat=3):
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
    for a, b in itertools.product(range(1, q), repeat=2):
        assert field.mul(a, b) != 0


def test_gf4_tables():
    """Encoding x ↦ 2, x + 1 ↦ 3 with x² = x + 1"""
    field = get_field(4)
    assert field.mul(2, 2) == 3
    assert field.add(2, 3) == 1
    assert field.inv(2) == 3


def test_field_elements():
    x = FieldElement(2, 9)
    assert x * x.inverse() == FieldElement(1, 9)
    assert (x - x).value == 0 and not (x - x)
    assert x / x == FieldElement(1, 9)
    with pytest.raises(InputError):
        FieldElement(1, 6)
    with pytest.raises(InputError):
        FieldElement(1, 4) + FieldElement(1, 5)
    with pytest.raises(ZeroDivisionError):
        FieldElement(0, 7).inverse()


def test_projective_point_normalization():
    assert ProjectivePoint.normalize((0, 2, 4), 5).coords == (0, 1, 2)
    with pytest.raises(InputError):
        ProjectivePoint.normalize((0, 0), 3)


def test_random_typed_multigraphs_respect_preconditions():
    for seed in range(200):
        tm = gen_random_typed(4 + seed % 20, seed, c_fraction=1.0 if seed % 2 else 0.4)
        assert tm.max_degree() <= 3
        assert tm.all_c_k4_components() == []
    assert gen_random_typed(12, 5) == gen_random_typed(12, 5)


def test_greedy_packing(c6, petersen):
    assert greedy_packing(c6, 1).vertices == {0, 3}
    assert verify_k_limited(petersen, greedy_packing(petersen, 2).vertices, 2).valid
    with pytest.raises(InputError):
        greedy_packing(c6, 0)


def test_greedy_meets_single_packing_bound():
    """For k = 1 greedy keeps at least n/(Δ² + 1) vertices"""
    for g in max_degree_three_graphs():
        delta = degree_stats(g).max_degree
        assert len(greedy_packing(g, 1)) * (delta ** 2 + 1) >= g.vertex_count


def test_greedy_logs_its_choice(c6, caplog):
    with caplog.at_level('DEBUG', logger='limpack.greedy'):
        greedy_packing(c6, 1)
    assert "greedy k=1 chose 2 of 6 vertices" in caplog.text


def test_catalog_holds_every_connected_cubic_graph():
    """1, 2, 5 and 19 connected cubic graphs on 4, 6, 8 and 10 vertices"""
    by_size = connected_subcubic_by_size()
    cubic = {n: sum(is_regular(g) == 3 for g in by_size[n]) for n in (4, 6, 8, 10)}
    assert cubic == {4: 1, 6: 2, 8: 5, 10: 19}
    assert [len(by_size[n]) for n in (1, 2, 3)] == [1, 1, 2]
