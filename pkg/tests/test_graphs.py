import itertools

import pytest

from vnumber import (
    Monomial,
    VnumError,
    associated_primes,
    clique_sum_1,
    clique_sum_analysis,
    cycle,
    edge_ideal,
    from_edges,
    is_minimal_vertex_cover,
    is_stable,
    is_vertex_cover,
    join,
    neighborhood,
    path,
    v_cycle_closed,
    v_graph,
    v_join_closed,
    v_oracle,
    v_path_closed,
)
from vnumber.graphs import minimum_stable_witnesses


class TestConstructors:
    def test_path(self):
        assert path(4).edges == {(1, 2), (2, 3), (3, 4)}

    def test_cycle(self):
        assert cycle(5).edges == {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}

    def test_self_loop_rejected(self):
        with pytest.raises(VnumError):
            from_edges(3, [(1, 1)])

    def test_out_of_range_edge_rejected(self):
        with pytest.raises(VnumError):
            from_edges(3, [(1, 4)])

    def test_tiny_sizes_rejected(self):
        with pytest.raises(VnumError):
            path(1)
        with pytest.raises(VnumError):
            cycle(2)


class TestCliqueSumAndJoin:
    def test_counts_cycle_path(self):
        h = clique_sum_1(cycle(5), path(4))
        assert h.vertex_count == 8
        assert len(h.edges) == 8

    def test_counts_cycle_cycle(self):
        h = clique_sum_1(cycle(5), cycle(5))
        assert h.vertex_count == 9
        assert len(h.edges) == 10

    def test_nonadditivity_example_structure(self):
        # gluing the two 5-edge/4-edge stars reproduces the 10-variable ideal
        g1 = from_edges(6, [(1, 2), (2, 3), (3, 4), (2, 5), (5, 6)])
        g2 = from_edges(5, [(1, 2), (2, 3), (1, 4), (4, 5)])
        h = clique_sum_1(g1, g2, 1, 1)
        expected = from_edges(
            10,
            [(1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (1, 7), (7, 8), (1, 9), (9, 10)],
        )
        assert h == expected

    def test_join_k4(self):
        k4 = join(path(2), path(2))
        assert len(k4.edges) == 6

    def test_join_counts(self):
        h = join(cycle(5), path(4))
        assert h.vertex_count == 9
        assert len(h.edges) == 28

    def test_cone(self):
        g = cycle(5)
        coned = join(g, from_edges(1, []))
        assert coned.vertex_count == 6
        assert len(coned.edges) == 10


class TestEdgeIdeal:
    def test_path4(self):
        I = edge_ideal(path(4))
        assert set(I.generators) == {
            Monomial((1, 1, 0, 0)),
            Monomial((0, 1, 1, 0)),
            Monomial((0, 0, 1, 1)),
        }

    def test_cycle5_letters(self):
        from vnumber.parsing import parse_ideal

        assert edge_ideal(cycle(5)) == parse_ideal("a*b, b*c, c*d, d*e, a*e").ideal

    def test_edgeless_rejected(self):
        with pytest.raises(VnumError):
            edge_ideal(from_edges(3, []))


class TestNeighborhoodsAndCovers:
    def test_path4_center(self):
        g = path(4)
        n = neighborhood(g, {3})
        assert n == {2, 4}
        assert is_minimal_vertex_cover(g, n)

    def test_empty_set(self):
        g = path(4)
        assert neighborhood(g, set()) == frozenset()
        assert not is_vertex_cover(g, set())

    def test_cover_not_minimal(self):
        g = cycle(5)
        assert is_vertex_cover(g, {1, 2, 3, 4})
        assert not is_minimal_vertex_cover(g, {1, 2, 3, 4})

    def test_stability(self):
        g = cycle(5)
        assert is_stable(g, {1, 3})
        assert not is_stable(g, {1, 2})

    def test_out_of_range(self):
        with pytest.raises(VnumError):
            neighborhood(path(4), {9})


class TestVGraph:
    def test_path_examples(self):
        assert v_graph(path(4)).value == 1
        assert v_graph(cycle(5)).value == 2
        assert v_graph(path(6)).value == 2

    def test_witness_is_certified(self):
        w = v_graph(path(10))
        g = path(10)
        assert is_stable(g, w.stable_set)
        assert is_minimal_vertex_cover(g, neighborhood(g, w.stable_set))

    def test_matches_ideal_oracle(self):
        for g in [path(5), path(8), cycle(6), cycle(9), join(path(4), path(2))]:
            assert v_graph(g).value == v_oracle(edge_ideal(g)).value

    def test_squarefree_ass_is_minimal_covers(self):
        for g in [path(5), cycle(6), clique_sum_1(cycle(5), path(4))]:
            primes = {frozenset(p.support) for p in associated_primes(edge_ideal(g))}
            covers = set()
            for k in range(g.vertex_count + 1):
                for c in itertools.combinations(g.vertices, k):
                    if is_minimal_vertex_cover(g, set(c)):
                        covers.add(frozenset(c))
            assert primes == covers


class TestClosedForms:
    def test_path_spot_values(self):
        assert v_path_closed(2) == 1
        assert v_path_closed(4) == 1
        assert v_path_closed(5) == 1
        assert v_path_closed(6) == 2
        assert v_path_closed(10) == 3

    def test_path_agreement(self):
        for n in range(2, 15):
            assert v_graph(path(n)).value == v_path_closed(n)

    def test_cycle_spot_values(self):
        assert v_cycle_closed(3) == 1
        assert v_cycle_closed(4) == 1
        assert v_cycle_closed(5) == 2
        assert v_cycle_closed(9) == 3

    def test_cycle_agreement(self):
        for n in range(3, 13):
            assert v_graph(cycle(n)).value == v_cycle_closed(n)

    def test_endpoint_lemma(self):
        # no minimum witness of a path contains both endpoints
        for n in range(2, 15):
            for w in minimum_stable_witnesses(path(n)):
                assert not {1, n} <= w.stable_set


class TestJoinFormula:
    def test_examples(self):
        assert v_join_closed(cycle(5), path(4)) == 1
        assert v_join_closed(path(6), path(6)) == 2
        assert v_graph(join(cycle(5), cycle(5))).value == 2

    def test_agreement(self):
        operands = [path(4), path(6), cycle(5), cycle(6)]
        for g1, g2 in itertools.combinations_with_replacement(operands, 2):
            assert v_graph(join(g1, g2)).value == min(
                v_graph(g1).value, v_graph(g2).value
            )

    def test_edgeless_operand_falls_back(self):
        lone = from_edges(1, [])
        assert v_join_closed(cycle(5), lone) == v_graph(join(cycle(5), lone)).value


class TestCliqueSumAnalysis:
    def test_cycle_path_bracket(self):
        lower, upper, exact = clique_sum_analysis("cycle+path", 5, 8)
        assert (lower, upper) == (3, 4)
        assert exact == 3

    def test_cycle6_path8(self):
        assert clique_sum_analysis("cycle+path", 6, 8)[2] == 3

    def test_cycle_cycle_exact(self):
        assert clique_sum_analysis("cycle+cycle", 5, 5) == (3, 3, 3)

    def test_bracket_contains_truth(self):
        for n in (5, 6, 7):
            for m in (4, 6, 8):
                lower, upper, exact = clique_sum_analysis("cycle+path", n, m)
                actual = v_graph(clique_sum_1(cycle(n), path(m))).value
                assert lower <= actual <= upper
                if exact is not None:
                    assert actual == exact

    def test_unknown_kind(self):
        with pytest.raises(VnumError):
            clique_sum_analysis("path+path", 4, 4)
