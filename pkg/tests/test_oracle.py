"""Brute-force oracle: Hasse construction, chain enumeration, censuses."""

import pytest

from cobweb.gridposet import grid_chain_count, grid_elements, grid_leq, grid_size, grid_whitney
from cobweb.oracle import (
    ChainReport,
    ScaleLimitError,
    build_grid_hasse,
    build_pnf_hasse,
    enumerate_maximal_chains,
    rank_level_counts,
)
from cobweb.pnfposet import pnf_whitney_vector
from cobweb.sequences import fibonacci, gaussian, naturals, ones

FIB = fibonacci()
NAT = naturals()
ONES = ones()


def reachable(diagram, start):
    seen, stack = set(), [start]
    while stack:
        vertex = stack.pop()
        for upper in diagram.successors(vertex):
            if upper not in seen:
                seen.add(upper)
                stack.append(upper)
    return seen


class TestGridHasse:
    def test_hand_reduced_small_cases(self):
        diagram = build_grid_hasse(1, 2)
        assert len(diagram.vertices) == 3
        assert list(diagram.cover_edges()) == [((0, 1), (0, 2)), ((0, 2), (1, 2))]

        path = build_grid_hasse(0, 3)
        assert path.edge_count == 2
        assert list(path.cover_edges()) == [((0, 1), (0, 2)), ((0, 2), (0, 3))]

    def test_hand_reduction_2_3(self):
        diagram = build_grid_hasse(2, 3)
        assert len(diagram.vertices) == 6
        assert sorted(diagram.cover_edges()) == [
            ((0, 1), (0, 2)),
            ((0, 2), (0, 3)),
            ((0, 2), (1, 2)),
            ((0, 3), (1, 3)),
            ((1, 2), (1, 3)),
            ((1, 3), (2, 3)),
        ]

    def test_unique_minimum(self):
        for k, n in [(0, 4), (1, 3), (3, 5)]:
            assert build_grid_hasse(k, n).minimal_vertices == ((0, 1),)

    def test_cover_edges_raise_rank_by_one(self):
        for k, n in [(1, 3), (2, 4), (3, 5), (4, 6)]:
            diagram = build_grid_hasse(k, n)
            for lower, upper in diagram.cover_edges():
                assert diagram.rank_of(upper) == diagram.rank_of(lower) + 1

    def test_transitive_closure_recovers_full_order(self):
        for n in range(2, 7):
            for k in range(n):
                diagram = build_grid_hasse(k, n)
                elements = grid_elements(k, n)
                for a in elements:
                    above = reachable(diagram, a)
                    expected = {b for b in elements if a != b and grid_leq(a, b)}
                    assert above == expected

    def test_irreflexive_acyclic(self):
        diagram = build_grid_hasse(3, 5)
        for a, b in diagram.cover_edges():
            assert a != b
        for vertex in diagram.vertices:
            assert vertex not in reachable(diagram, vertex)

    def test_scale_guard(self):
        with pytest.raises(ScaleLimitError, match="12"):
            build_grid_hasse(3, 13)
        assert len(build_grid_hasse(3, 13, max_index=13).vertices) == grid_size(3, 13)


class TestPnfHasse:
    def test_level_sizes(self):
        assert rank_level_counts(build_pnf_hasse(4, NAT)) == [1, 3, 1]
        assert rank_level_counts(build_pnf_hasse(6, FIB)) == [1, 5, 6, 1]

    def test_single_vertex(self):
        diagram = build_pnf_hasse(1, FIB)
        assert diagram.vertices == [(0, 1)]
        assert list(diagram.cover_edges()) == []

    def test_copies_numbered_from_one(self):
        diagram = build_pnf_hasse(4, NAT)
        assert diagram.vertices == [(0, 1), (1, 1), (1, 2), (1, 3), (2, 1)]
        assert diagram.minimal_vertices == ((0, 1),)

    def test_complete_bipartite_between_consecutive_levels(self):
        diagram = build_pnf_hasse(5, NAT)  # levels 1, 4, 3
        edges = list(diagram.cover_edges())
        assert len(edges) == diagram.edge_count == 1 * 4 + 4 * 3
        for lower, upper in edges:
            assert upper[0] == lower[0] + 1

    def test_census_consistency_to_30_for_slow_sequences(self):
        # fast-growing F blows past any feasible diagram long before n = 30;
        # naturals peaks at B_30 = Fib(31) = 1,346,269 vertices and still fits
        for seq in (NAT, ONES):
            for n in range(13, 31):
                diagram = build_pnf_hasse(n, seq, max_index=30)
                assert rank_level_counts(diagram) == pnf_whitney_vector(n, seq)

    def test_policy_changes_top_level(self):
        include = build_pnf_hasse(4, NAT, "include")
        exclude = build_pnf_hasse(4, NAT, "exclude")
        assert rank_level_counts(include) == [1, 3, 1]
        assert rank_level_counts(exclude) == [1, 3]

    def test_index_guard(self):
        with pytest.raises(ScaleLimitError):
            build_pnf_hasse(13, NAT)

    def test_vertex_guard(self):
        with pytest.raises(ScaleLimitError, match="vertex guard"):
            build_pnf_hasse(10, gaussian(2), max_vertices=100)


class TestChainEnumeration:
    def test_hand_enumerated_grid_chains(self):
        assert enumerate_maximal_chains(build_grid_hasse(1, 2)) == ChainReport(1, 3, 3, True)
        assert enumerate_maximal_chains(build_grid_hasse(2, 3)) == ChainReport(2, 5, 5, True)

    def test_ordinal_sum_chains_are_level_products(self):
        report = enumerate_maximal_chains(build_pnf_hasse(4, NAT))
        assert report == ChainReport(3, 3, 3, True)

    def test_gradedness_across_grid_family(self):
        for n in range(2, 9):
            for k in range(n):
                report = enumerate_maximal_chains(build_grid_hasse(k, n))
                assert report.graded
                assert report.min_length == report.max_length == k + n

    def test_matches_closed_form(self):
        for n in range(2, 10):
            for k in range(n):
                report = enumerate_maximal_chains(build_grid_hasse(k, n))
                assert report.chain_count == grid_chain_count(k, n)

    def test_census_matches_whitney(self):
        for n in range(2, 10):
            for k in range(n):
                assert rank_level_counts(build_grid_hasse(k, n)) == grid_whitney(k, n)

    def test_chain_guard_trips(self):
        with pytest.raises(ScaleLimitError, match="chains"):
            enumerate_maximal_chains(build_grid_hasse(5, 6), max_chains=10)

    def test_product_rule_with_explicit_overrides(self):
        # the products exceed the default guard at the top of these ranges
        cases = [(NAT, range(1, 11)), (FIB, range(1, 10)), (ONES, range(1, 11))]
        for seq, degrees in cases:
            for n in degrees:
                product = 1
                for size in pnf_whitney_vector(n, seq):
                    product *= size
                report = enumerate_maximal_chains(
                    build_pnf_hasse(n, seq), max_chains=product
                )
                assert report.chain_count == product
                assert report.graded


class TestEdgeDump:
    def test_grid_dump_format(self):
        dump = build_grid_hasse(1, 2).edge_dump()
        assert dump == "(0,1) (0,2)\n(0,2) (1,2)\n"

    def test_pnf_dump_format(self):
        dump = build_pnf_hasse(2, NAT).edge_dump()
        assert dump == "(0#1) (1#1)\n"

    def test_dump_is_deterministic(self):
        first = build_grid_hasse(2, 4).edge_dump()
        second = build_grid_hasse(2, 4).edge_dump()
        assert first == second
