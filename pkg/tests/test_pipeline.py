"""End-to-end search and the reference reproductions."""

import math

import numpy as np
import pytest

from eaocws.clique import Budget
from eaocws.pipeline import (
    find_code, find_ring_code, reproduce_cell, reproduce_example, ring_placements, table_cells,
)
from eaocws.structure import CodeLayout, ring_graph
from eaocws.verify import symplectic_verify


class TestPlacements:
    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_count(self, n):
        # the ring has 2n automorphisms
        assert sum(1 for _ in ring_placements(n)) == math.factorial(n) // (2 * n)

    def test_identity_first(self):
        perm, g = next(ring_placements(6))
        assert perm == tuple(range(6)) and g == ring_graph(6)

    def test_every_placement_is_a_ring(self):
        for _, g in ring_placements(6):
            a = g.adjacency
            assert (a.sum(axis=0) == 2).all()
            # connected 2-regular graph on 6 vertices
            reach = np.linalg.matrix_power(a + np.eye(6, dtype=int), 5)
            assert (reach > 0).all()


class TestFindCode:
    def test_ring5_cws(self):
        out = find_code(CodeLayout(5), ring_graph(5), 3)
        assert out.K == 2 and out.codewords.optimal
        assert symplectic_verify(out.code, 3).passed

    def test_standard_placement(self):
        out = find_ring_code(CodeLayout(6, 3, 1), 3)
        assert out.placement == tuple(range(6)) and out.K == 2

    def test_best_placement(self):
        out = find_ring_code(CodeLayout(6, 3, 1), 3, placement="best")
        assert out.K == 4 and not out.budget_exhausted
        assert out.summary()["placement"] == [1, 2, 3, 4, 6, 5]
        assert symplectic_verify(out.code, 3).passed

    def test_best_stops_at_cap(self):
        out = find_ring_code(CodeLayout(5, 3, 1), 2, placement="best")
        assert out.K == 2 == 1 << out.code.layout.s and out.placements_tried == 1

    def test_best_covers_all_when_below_cap(self):
        out = find_ring_code(CodeLayout(5, 2, 1), 3, placement="best")
        assert out.K == 2 and out.placements_tried == 12

    def test_sweep_budget(self):
        out = find_ring_code(CodeLayout(7, 4, 1), 5, placement="best", budget=Budget(max_seconds=1e-6))
        assert out.budget_exhausted and out.placements_tried < 360

    def test_unknown_placement(self):
        with pytest.raises(ValueError):
            find_ring_code(CodeLayout(5), 3, placement="random")


class TestExample:
    def test_all_checks_match(self):
        rep = reproduce_example()
        assert rep.ok, {k: v for k, v in rep.checks.items() if not v}
        assert len(rep.checks) == 12

    def test_example_is_distance_two(self):
        rep = reproduce_example()
        assert rep.details["symplectic_d3"]["verdict"] == "fail"


class TestTables:
    def test_cell_counts(self):
        assert len(table_cells(1)) == 19 and len(table_cells(2)) == 2

    def test_subset(self):
        cells = table_cells(1, [(5, 2), (7, 1, 2)])
        assert [c[:3] for c in cells] == [(5, 2, 1), (7, 1, 2)]

    def test_cell_sound_rule(self):
        res = reproduce_cell(6, 2, 1, 3, 4)
        assert res.found_K == 4 and res.verified and res.meets_reference and res.optimal

    def test_cell_single_rule_matches_count(self):
        res = reproduce_cell(5, 2, 1, 3, 4, degeneracy="single")
        # the count matches, the code does not reach distance 3
        assert res.found_K == 4 and not res.verified and not res.meets_reference

    def test_to_json(self):
        doc = reproduce_cell(6, 1, 1, 3, 2).to_json()
        assert doc["cell"] == [6, 1, 1, 3] and doc["placement"] == [1, 2, 3, 4, 5, 6]
