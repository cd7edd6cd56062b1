import pytest

from limpack.brooks import brooks_three_coloring
from limpack.cubic import (
    BASE_CASE, DEGREE_ONE, TraceStep, construct_two_limited, find_configuration_A,
)
from limpack.errors import PreconditionError
from limpack.exact import max_k_limited, max_typed_two_limited
from limpack.generators import copies, gen_cycle
from limpack.graph_core import Graph
from limpack.typed import C_EDGE, D_EDGE, TypedMultigraph
from limpack.verify import verify_k_limited, verify_typed_two_limited
from tests.catalog import max_degree_three_graphs, random_typed_multigraphs

K4_PAIRS = [(u, v) for u in range(4) for v in range(u + 1, 4)]


def _is_proper(g, colors):
    return set(colors) <= {0, 1, 2} and all(colors[u] != colors[v] for u, v in g.edges())


def _is_k4(g):
    return g.vertex_count == 4 and g.edge_count == 6


def test_single_vertex():
    chosen, trace = construct_two_limited(TypedMultigraph.from_edges(1, []))
    assert chosen == {0}
    assert trace.rules() == [BASE_CASE]


def test_empty_multigraph():
    chosen, trace = construct_two_limited(TypedMultigraph.from_edges(0, []))
    assert chosen == frozenset() and trace.steps == ()


def test_all_d_k4_takes_two():
    tm = TypedMultigraph.from_edges(4, [(u, v, D_EDGE) for u, v in K4_PAIRS])
    chosen, _ = construct_two_limited(tm)
    assert chosen == {0, 1}


def test_h6_reaches_optimum(h6):
    chosen, _ = construct_two_limited(TypedMultigraph.from_graph(h6))
    assert len(chosen) == 2
    assert verify_k_limited(h6, chosen, 2).valid


@pytest.mark.parametrize('m', [1, 2, 4])
def test_h6_copies_are_tight(h6, m):
    """n/3 is attained by disjoint copies of H6"""
    g = copies(h6, m)
    chosen, _ = construct_two_limited(TypedMultigraph.from_graph(g))
    assert len(chosen) == 2 * m
    assert verify_k_limited(g, chosen, 2).valid


def test_petersen(petersen):
    chosen, _ = construct_two_limited(TypedMultigraph.from_graph(petersen))
    assert len(chosen) >= 4
    assert verify_k_limited(petersen, chosen, 2).valid


def test_path_uses_degree_one_reduction():
    path = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    chosen, trace = construct_two_limited(TypedMultigraph.from_graph(path))
    assert chosen == {0, 2}
    assert trace.rules() == [DEGREE_ONE, BASE_CASE]
    assert trace.steps[0] == TraceStep(DEGREE_ONE, (0, 1), (0,), ())


def test_trace_line_format():
    assert TraceStep(DEGREE_ONE, (0, 1), (0,)).to_line() == "degree-1 removed=0,1 chosen=0 added=-"
    step = TraceStep('degree-2', (3, 4, 5), (4,), ((2, 6),))
    assert step.to_line() == "degree-2 removed=3,4,5 chosen=4 added=2-6"


def test_finds_configuration_a():
    """Five c-edges on {a, b, c, d} with bd missing, plus u adjacent to b and d"""
    edges = [(2, 0, C_EDGE), (2, 3, C_EDGE), (2, 1, C_EDGE), (0, 3, C_EDGE), (0, 1, C_EDGE),
             (3, 4, D_EDGE), (1, 4, D_EDGE), (4, 5, D_EDGE)]
    tm = TypedMultigraph.from_edges(6, edges)
    conf = find_configuration_A(tm)
    assert conf is not None
    assert conf.vertices == frozenset(range(6))
    for x, y in [(conf.c, conf.a), (conf.c, conf.d), (conf.c, conf.b), (conf.a, conf.d), (conf.a, conf.b)]:
        assert tm.is_c_edge(x, y)
    assert not tm.is_c_edge(conf.b, conf.d)
    assert conf.u in tm.neighbors(conf.b) & tm.neighbors(conf.d)
    chosen, _ = construct_two_limited(tm)
    assert verify_typed_two_limited(tm, chosen).valid
    assert 3 * len(chosen) >= 6


def test_no_configuration_a_without_it(c6):
    assert find_configuration_A(TypedMultigraph.from_graph(c6)) is None
    almost_k4 = TypedMultigraph.from_edges(4, [(u, v, C_EDGE) for u, v in K4_PAIRS[:-1]] + [(2, 3, D_EDGE)])
    assert find_configuration_A(almost_k4) is None


def test_rejects_degree_four():
    star = TypedMultigraph.from_edges(5, [(0, v, D_EDGE) for v in range(1, 5)])
    with pytest.raises(PreconditionError, match='degree 4'):
        construct_two_limited(star)


def test_rejects_all_c_k4_component():
    tm = TypedMultigraph.from_edges(5, [(u, v, C_EDGE) for u, v in K4_PAIRS])
    with pytest.raises(PreconditionError, match='c-edges'):
        construct_two_limited(tm)


@pytest.mark.parametrize('g', [gen_cycle(5), gen_cycle(6)], ids=['c5', 'c6'])
def test_brooks_on_cycles(g):
    assert _is_proper(g, brooks_three_coloring(g))


def test_brooks_on_petersen(petersen):
    assert _is_proper(petersen, brooks_three_coloring(petersen))


def test_brooks_with_bridge():
    """Two K4-minus-an-edge blocks joined by a bridge, all degrees 3"""
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (0, 4)]
    g = Graph.from_edges(8, edges)
    colors = brooks_three_coloring(g)
    assert _is_proper(g, colors)


def test_brooks_rejects_k4(k4):
    with pytest.raises(PreconditionError, match='K4'):
        brooks_three_coloring(k4)


def test_brooks_rejects_degree_four():
    with pytest.raises(PreconditionError):
        brooks_three_coloring(Graph.from_edges(5, [(0, v) for v in range(1, 5)]))


def test_brooks_on_catalog():
    for g in max_degree_three_graphs():
        if not _is_k4(g):
            assert _is_proper(g, brooks_three_coloring(g))


def test_catalog_packings_are_valid():
    """Every connected graph with Δ ≤ 3 gets a 2-limited packing of size ≥ n/3"""
    for g in max_degree_three_graphs():
        chosen, trace = construct_two_limited(TypedMultigraph.from_graph(g))
        assert verify_k_limited(g, chosen, 2).valid
        assert 3 * len(chosen) >= g.vertex_count
        assert len(chosen) <= max_k_limited(g, 2).optimum
        assert trace.removed_vertices() == frozenset(g.vertices)


def test_random_typed_multigraphs():
    for n, seed, tm in random_typed_multigraphs():
        chosen, trace = construct_two_limited(tm)
        assert verify_typed_two_limited(tm, chosen).valid, (n, seed)
        assert 3 * len(chosen) >= n, (n, seed)
        if n <= 16:
            assert len(chosen) <= max_typed_two_limited(tm).optimum


def test_trace_removes_every_vertex_once():
    for _, _, tm in random_typed_multigraphs(count=60):
        chosen, trace = construct_two_limited(tm)
        removed = [v for step in trace.steps for v in step.removed]
        assert sorted(removed) == list(tm.vertices)
        assert {v for step in trace.steps for v in step.chosen} == chosen


def test_construction_is_deterministic():
    for _, _, tm in random_typed_multigraphs(count=20):
        first = construct_two_limited(tm)
        second = construct_two_limited(tm)
        assert first[0] == second[0]
        assert first[1].to_text() == second[1].to_text()
