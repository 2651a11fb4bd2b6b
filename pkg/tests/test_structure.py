import random

from hypothesis import given, settings

from reeswalk import families
from reeswalk.complexes import validate
from reeswalk.monomials import IndexTuple
from reeswalk.structure import (
    INCONCLUSIVE,
    LINEAR_TYPE,
    REASON_FOREST,
    REASON_NO_EVEN_CYCLE,
    REASON_NO_WALK_UP_TO,
    REASON_NONE,
    CycleOrder,
    LineGraph,
    exists_simplicial_cycle,
    good_leaf,
    graph_has_even_cycle,
    is_extended_trail_order,
    is_forest,
    is_simplicial_cycle_order,
    is_special_cycle_order,
    line_graph,
    linear_type_structural,
)
from reeswalk.walks import WalkPair, enumerate_even_walks, is_even_walk

from helpers import (
    brute_force_has_even_cycle,
    canonical_cycle_orders,
    edge_adjacency,
    forest_corpus,
    small_complexes,
    small_graphs,
)

TRIANGLE = families.graph_complex([("a", "b"), ("b", "c"), ("c", "a")])
PATH3 = families.path_graph(3)
NECKLACE = families.triangle_necklace()


class TestTaxonomyPredicates:
    def test_triangle_is_everything(self):
        order = CycleOrder((1, 2, 3))
        assert is_extended_trail_order(TRIANGLE, order)
        assert is_special_cycle_order(TRIANGLE, order)
        assert is_simplicial_cycle_order(TRIANGLE, order)

    def test_common_vertex_breaks_trail(self):
        c = validate([["v", "a"], ["v", "b"], ["v", "c"]])
        assert not is_extended_trail_order(c, CycleOrder((1, 2, 3)))

    def test_scrambled_cycle_listed_order_fails(self):
        c = families.scrambled_even_cycle()
        w = WalkPair(IndexTuple.of(1, 3, 5, 7), IndexTuple.of(2, 4, 6, 8))
        assert is_even_walk(c, w).is_even_walk
        assert not is_extended_trail_order(c, CycleOrder(tuple(range(1, 9))))
        assert not (c.facet(4) & c.facet(5))

    def test_k4_four_cycle_is_simplicial_in_subcollection(self):
        k4 = families.graph_complex(
            [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1"), ("1", "3"), ("2", "4")]
        )
        square = CycleOrder((1, 2, 3, 4))
        assert is_special_cycle_order(k4, square)
        assert is_simplicial_cycle_order(k4, square)
        # placing a chord non-consecutively to an incident edge breaks it
        with_chord = CycleOrder((1, 2, 3, 4, 5))
        assert not is_simplicial_cycle_order(k4, with_chord)

    def test_swallowed_intersection_breaks_special(self):
        c = validate([["a", "b", "x"], ["b", "c"], ["c", "d"], ["d", "a", "b"]])
        order = CycleOrder((1, 2, 3, 4))
        assert is_extended_trail_order(c, order)
        assert not is_special_cycle_order(c, order)  # b lives in facet 4 too
        assert not is_simplicial_cycle_order(c, order)

    def test_pendant_edge_breaks_everything(self):
        c = families.graph_complex([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])
        assert not is_extended_trail_order(c, CycleOrder((1, 2, 3, 4)))

    @given(small_complexes(max_q=6))
    @settings(max_examples=25)
    def test_taxonomy_chain(self, c):
        from itertools import combinations

        for size in range(3, c.q + 1):
            for combo in combinations(range(1, c.q + 1), size):
                for order in canonical_cycle_orders(combo):
                    o = CycleOrder(order)
                    if is_simplicial_cycle_order(c, o):
                        assert is_special_cycle_order(c, o)
                    if is_special_cycle_order(c, o):
                        assert is_extended_trail_order(c, o)


class TestSimplicialCycleSearch:
    def test_tree_has_none(self):
        assert exists_simplicial_cycle(families.path_graph(4), 4) is None

    def test_triangle(self):
        sub, order = exists_simplicial_cycle(TRIANGLE, 3)
        assert sub.indices == {1, 2, 3}
        assert order.indices == (1, 2, 3)

    def test_necklace_has_cycle(self):
        found = exists_simplicial_cycle(NECKLACE, 6)
        assert found is not None
        assert is_simplicial_cycle_order(NECKLACE, found[1])

    def test_cone_has_none(self):
        assert exists_simplicial_cycle(families.cone_over_cycle(4), 4) is None

    def test_max_support_caps_search(self):
        c4 = families.cycle_graph(4)
        assert exists_simplicial_cycle(c4, 3) is None
        sub, order = exists_simplicial_cycle(c4, 4)
        assert order.indices == (1, 2, 3, 4)

    def test_search_within_subcollection(self):
        neck = families.triangle_necklace()
        sub = neck.subcollection({3, 4, 5})  # a path of three triangles
        assert exists_simplicial_cycle(sub, 3) is None


class TestGoodLeaf:
    def test_single_facet(self):
        assert good_leaf(validate([["a", "b"]])) == 1

    def test_path(self):
        assert good_leaf(PATH3) == 1

    def test_triangle_has_none(self):
        assert good_leaf(TRIANGLE) is None

    def test_subcollection(self):
        assert good_leaf(PATH3.subcollection({2, 3})) == 2


class TestForest:
    def test_path(self):
        cert = is_forest(PATH3)
        assert cert.is_forest and cert.peeling == (1, 2, 3)

    def test_triangle(self):
        cert = is_forest(TRIANGLE)
        assert not cert.is_forest
        assert cert.cycle.indices == (1, 2, 3)

    def test_necklace(self):
        assert not is_forest(NECKLACE).is_forest

    def test_cone_peel_blocks(self):
        # no simplicial cycle in the listed sense, yet no good leaf either:
        # the apex vertex sits in every facet
        cert = is_forest(families.cone_over_cycle(4))
        assert cert.is_forest and cert.peeling is None
        assert cert.peel_blocked_at == frozenset({1, 2, 3, 4})

    def test_random_forests_peel_and_have_good_leaves(self):
        for c in forest_corpus(20, seed=23):
            cert = is_forest(c)
            assert cert.is_forest and cert.peeling is not None
            from itertools import combinations

            for size in range(1, c.q + 1):
                for combo in combinations(range(1, c.q + 1), size):
                    assert good_leaf(c.subcollection(combo)) is not None

    def test_random_forests_have_no_walks(self):
        for c in forest_corpus(20, seed=29):
            assert enumerate_even_walks(c, 3).walks == []


class TestLineGraph:
    def test_disjoint_facets(self):
        g = line_graph(validate([["a", "b"], ["c", "d"]]))
        assert g.nodes == (1, 2) and not g.edges

    def test_path(self):
        g = line_graph(PATH3)
        assert g.edges == frozenset({frozenset({1, 2}), frozenset({2, 3})})

    def test_necklace(self):
        g = line_graph(NECKLACE)
        expected = {(1, 2), (1, 6), (2, 3), (2, 5), (2, 6), (3, 4), (3, 6), (4, 5), (5, 6)}
        assert g.edges == frozenset(frozenset(e) for e in expected)


def _graph(nodes, edges):
    return LineGraph(tuple(nodes), frozenset(frozenset(e) for e in edges))


class TestEvenCycleDetection:
    def test_triangle_none(self):
        assert graph_has_even_cycle(_graph([1, 2, 3], [(1, 2), (2, 3), (3, 1)])) is None

    def test_square(self):
        cyc = graph_has_even_cycle(_graph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1)]))
        assert cyc == [1, 2, 3, 4]

    def test_two_triangles_sharing_vertex(self):
        g = _graph([1, 2, 3, 4, 5], [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])
        assert graph_has_even_cycle(g) is None

    def test_theta_graph_even_cycle(self):
        # two vertices joined by three paths of lengths 1, 2, 2
        g = _graph([1, 2, 3, 4], [(1, 2), (1, 3), (3, 2), (1, 4), (4, 2)])
        cyc = graph_has_even_cycle(g)
        assert cyc is not None and len(cyc) % 2 == 0
        _assert_valid_cycle(g, cyc)

    @given(small_graphs(min_edges=3, max_edges=9))
    @settings(max_examples=60)
    def test_matches_brute_force(self, c):
        # reuse random graphs as abstract node/edge sets
        index = {v: k + 1 for k, v in enumerate(sorted(c.vertex_universe))}
        edges = [tuple(sorted(index[v] for v in f)) for f in c.facets]
        g = _graph(sorted(index.values()), edges)
        cyc = graph_has_even_cycle(g)
        brute = brute_force_has_even_cycle(edge_adjacency(edges))
        assert (cyc is not None) == brute
        if cyc is not None:
            _assert_valid_cycle(g, cyc)


def _assert_valid_cycle(g: LineGraph, cyc: list[int]):
    assert len(cyc) >= 3 and len(set(cyc)) == len(cyc)
    for k, node in enumerate(cyc):
        assert frozenset((node, cyc[(k + 1) % len(cyc)])) in g.edges


class TestLinearTypeStructural:
    def test_forest_reason(self):
        cert = linear_type_structural(PATH3, 3)
        assert (cert.verdict, cert.reason) == (LINEAR_TYPE, REASON_FOREST)
        assert cert.to_json() == {
            "verdict": "LINEAR_TYPE",
            "reason": "FOREST",
            "s_max": None,
            "evidence": None,
        }

    def test_odd_cycle_certified_by_line_graph(self):
        for n in (3, 5, 7):
            cert = linear_type_structural(families.cycle_graph(n), 3)
            assert cert.verdict == LINEAR_TYPE
            assert cert.reason == REASON_NO_EVEN_CYCLE

    def test_necklace_inconclusive_with_walk(self):
        cert = linear_type_structural(NECKLACE, 3)
        assert (cert.verdict, cert.reason) == (INCONCLUSIVE, REASON_NONE)
        assert cert.evidence_walk is not None

    def test_truncated_search_stays_inconclusive(self):
        # the eight-cycle's only walk has length four on each side, so a
        # search capped at three finds nothing; that is not a certificate
        cert = linear_type_structural(families.cycle_graph(8), 3)
        assert (cert.verdict, cert.reason) == (INCONCLUSIVE, REASON_NO_WALK_UP_TO)
        assert cert.s_max == 3 and cert.evidence_cycle is not None
        deeper = linear_type_structural(families.cycle_graph(8), 4)
        assert deeper.reason == REASON_NONE and deeper.evidence_walk is not None

    def test_cone_never_certified_as_forest(self):
        # the blocked peeling keeps the unsound forest certificate away
        cert = linear_type_structural(families.cone_over_cycle(4), 2)
        assert cert.verdict == INCONCLUSIVE
        assert cert.evidence_walk is not None

    def test_no_even_line_cycle_implies_no_walks(self):
        rng = random.Random(31)
        checked = 0
        for _ in range(40):
            c = families.random_complex(rng)
            if graph_has_even_cycle(line_graph(c)) is None:
                checked += 1
                assert enumerate_even_walks(c, 4).walks == []
        assert checked > 0
