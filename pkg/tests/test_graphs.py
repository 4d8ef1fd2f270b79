"""Multigraphs, cycle/bond matroids, signed incidence, minimal cuts."""

from fractions import Fraction

import pytest

from matroidlab import (
    GF2,
    GF3,
    GF5,
    Q,
    MultiGraph,
    bond_matroid,
    component_count,
    cycle_matroid,
    format_graph,
    minimal_edge_cuts,
    oracle_difference,
    parse_graph,
    signed_incidence,
    verify_graphic_representable,
)
from matroidlab.errors import GroundTooLarge, ParseError

K3 = MultiGraph(3, ((0, 1), (1, 2), (0, 2)))
TREE = MultiGraph(3, ((0, 1), (1, 2)))
LOOP = MultiGraph(1, ((0, 0),))
PARALLEL = MultiGraph(2, ((0, 1), (0, 1)))
GADGET = MultiGraph(3, ((0, 0), (0, 1), (0, 1), (1, 2)))


class TestMultiGraph:
    def test_bad_endpoint(self):
        with pytest.raises(ValueError):
            MultiGraph(2, ((0, 2),))

    def test_component_count(self):
        assert component_count(K3, 0b111) == 1
        assert component_count(K3, 0) == 3
        assert component_count(TREE, 0b01) == 2


class TestCycleMatroid:
    def test_triangle_single_circuit(self):
        assert cycle_matroid(K3).circuits() == [0b111]

    def test_loop_edge(self):
        assert cycle_matroid(LOOP).circuits() == [0b1]

    def test_parallel_pair(self):
        assert cycle_matroid(PARALLEL).circuits() == [0b11]

    def test_triangle_matches_binary_matroid(self):
        from matroidlab import LinearMatroid, Matrix

        a1 = LinearMatroid(Matrix.from_rows(GF2, [(1, 0, 1), (0, 1, 1)]))
        assert oracle_difference(cycle_matroid(K3), a1) is None


class TestBondMatroid:
    def test_triangle_bonds_are_pairs(self):
        assert bond_matroid(K3).circuits() == [0b011, 0b101, 0b110]

    def test_loop_becomes_coloop(self):
        assert bond_matroid(LOOP).circuits() == []

    def test_tree_edges_give_singleton_bonds(self):
        assert bond_matroid(TREE).circuits() == [0b01, 0b10]

    def test_dual_of_bond_is_cycle(self):
        for g in (K3, TREE, GADGET):
            assert oracle_difference(bond_matroid(g).dual(), cycle_matroid(g)) is None


class TestMinimalCuts:
    @pytest.mark.parametrize("g", [K3, TREE, LOOP, PARALLEL, GADGET])
    def test_bond_circuits_are_minimal_cuts(self, g):
        assert bond_matroid(g).circuits() == minimal_edge_cuts(g)

    def test_triangle_cuts(self):
        assert minimal_edge_cuts(K3) == [0b011, 0b101, 0b110]

    def test_loop_never_cuts(self):
        assert minimal_edge_cuts(LOOP) == []


class TestSignedIncidence:
    def test_k3_over_q(self):
        fam = signed_incidence(K3, Q)
        assert fam.matrix.entries == (
            (Fraction(1), Fraction(0), Fraction(1)),
            (Fraction(-1), Fraction(1), Fraction(0)),
            (Fraction(0), Fraction(-1), Fraction(-1)),
        )

    def test_loop_gives_zero_column(self):
        fam = signed_incidence(LOOP, Q)
        assert fam.matrix.entries == ((Fraction(0),),)

    def test_single_edge_gf2(self):
        fam = signed_incidence(MultiGraph(2, ((0, 1),)), GF2)
        assert fam.matrix.entries == ((1,), (1,))


class TestRepresentability:
    @pytest.mark.parametrize("g", [K3, TREE, LOOP, PARALLEL, GADGET])
    @pytest.mark.parametrize("field", [GF2, GF3, GF5, Q])
    def test_cycle_matroid_is_representable(self, g, field):
        ok, witness = verify_graphic_representable(g, field)
        assert ok, witness

    def test_edge_cap(self):
        big = MultiGraph(2, tuple((0, 1) for _ in range(17)))
        with pytest.raises(GroundTooLarge):
            verify_graphic_representable(big, GF2)


class TestGraphFormat:
    def test_round_trip(self):
        text = format_graph(GADGET)
        assert parse_graph(text) == GADGET

    def test_edges_sorted_by_id(self):
        g = parse_graph("vertices 2\nedge 1 0 1\nedge 0 1 1\n")
        assert g.edges == ((1, 1), (0, 1))

    def test_duplicate_id(self):
        with pytest.raises(ParseError):
            parse_graph("vertices 2\nedge 0 0 1\nedge 0 1 0\n")

    def test_non_contiguous_ids(self):
        with pytest.raises(ParseError):
            parse_graph("vertices 2\nedge 0 0 1\nedge 2 0 1\n")

    def test_bad_endpoint(self):
        with pytest.raises(ParseError):
            parse_graph("vertices 2\nedge 0 0 5\n")
