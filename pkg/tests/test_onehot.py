"""One-hot QUBO encoding: penalties, ground states, decoding, property checks."""

import pytest
from conftest import complete_graph, connected_graphs_up_to_iso, path_graph

from qpart.errors import DimensionError
from qpart.graphs import Coloring, Graph, brooks_upper_bound, chromatic_number_exact
from qpart.onehot import (
    check_properties_onehot,
    decode_onehot,
    encode_mgc_onehot,
    onehot_penalties,
    x_var,
    y_var,
)
from qpart.pbo import ground_states

K3 = complete_graph(3)
P3 = path_graph(3)


class TestPenalties:
    def test_explicit_choice_values(self):
        pen = onehot_penalties(3, 3, 3)
        assert (pen.a_link, pen.a_adjacency, pen.a_onehot) == (4, 13, 64)

    def test_single_vertex_values(self):
        pen = onehot_penalties(1, 0, 1)
        assert (pen.a_link, pen.a_adjacency, pen.a_onehot) == (2, 3, 5)

    def test_bounds_hold_on_grid(self):
        for n in range(1, 12):
            for m in (0, 1, n, 3 * n):
                for c in range(1, n + 2):
                    assert onehot_penalties(n, m, c).satisfies_bounds(m, c)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            onehot_penalties(0, 0, 1)


class TestEncoding:
    def test_variable_count_and_degree(self):
        prob = encode_mgc_onehot(K3, 3)
        assert prob.num_variables == (3 + 1) * 3 == 12
        assert prob.polynomial.degree() == 2
        assert prob.registry[x_var(1, 2, 3)] == "x[1][2]"
        assert prob.registry[y_var(0, 3, 3)] == "y[0]"

    def test_k3_ground_energy_is_chromatic_number(self):
        prob = encode_mgc_onehot(K3, 3)
        energy, states = ground_states(prob.polynomial, prob.num_variables)
        assert energy == 3
        for bits in states:
            report = check_properties_onehot(prob, bits)
            assert report.all_satisfied()
            assert report.colors_used == 3
            decoded = decode_onehot(prob, bits)
            assert isinstance(decoded, Coloring)
            assert decoded.is_proper(K3)
            assert decoded.distinct_count() == 3

    def test_p3_ground_energy(self):
        prob = encode_mgc_onehot(P3, 2)
        assert prob.num_variables == 8
        energy, states = ground_states(prob.polynomial, prob.num_variables)
        assert energy == 2
        for bits in states:
            report = check_properties_onehot(prob, bits)
            assert report.all_satisfied()
            assert report.colors_used == 2

    def test_single_vertex_single_color(self):
        prob = encode_mgc_onehot(Graph(1, ()), 1)
        energy, _ = ground_states(prob.polynomial, prob.num_variables)
        assert energy == 1

    def test_default_colors_is_brooks(self):
        prob = encode_mgc_onehot(K3)
        assert prob.meta["c_num"] == brooks_upper_bound(K3) == 3

    def test_rejects_nonpositive_colors(self):
        with pytest.raises(ValueError):
            encode_mgc_onehot(K3, 0)


class TestDecoding:
    def test_all_zeros_reports_every_vertex(self):
        prob = encode_mgc_onehot(K3, 3)
        assert decode_onehot(prob, (0,) * 12) == [0, 1, 2]

    def test_double_set_vertex_reported(self):
        prob = encode_mgc_onehot(K3, 3)
        bits = [0] * 12
        bits[x_var(0, 0, 3)] = 1
        bits[x_var(0, 1, 3)] = 1
        bits[x_var(1, 0, 3)] = 1
        bits[x_var(2, 1, 3)] = 1
        assert decode_onehot(prob, tuple(bits)) == [0]

    def test_dimension_mismatch(self):
        prob = encode_mgc_onehot(K3, 3)
        with pytest.raises(DimensionError):
            decode_onehot(prob, (0,) * 5)

    def test_unfaithful_indicator_detected(self):
        prob = encode_mgc_onehot(P3, 2)
        bits = [0] * 8
        # proper one-hot coloring 0,1,0 but y left all-zero
        bits[x_var(0, 0, 2)] = 1
        bits[x_var(1, 1, 2)] = 1
        bits[x_var(2, 0, 2)] = 1
        report = check_properties_onehot(prob, tuple(bits))
        assert report.one_hot_satisfied and report.proper_coloring
        assert not report.indicator_faithful
        assert report.colors_used == 0


class TestDecisionVersion:
    def test_zero_energy_iff_colorable(self):
        from qpart.onehot import encode_gc_onehot

        for g, c, colorable in ((K3, 3, True), (K3, 2, False), (P3, 2, True)):
            prob = encode_gc_onehot(g, c)
            assert prob.num_variables == g.n * c
            energy, _ = ground_states(prob.polynomial, prob.num_variables)
            assert (energy == 0) == colorable


def test_theorem_ground_state_properties_small_family():
    # every ground state of every connected graph on <= 3 vertices satisfies
    # the four penalty-theorem properties with energy equal to chi
    for n in (2, 3):
        for g in connected_graphs_up_to_iso(n):
            chi = chromatic_number_exact(g)
            for c in sorted({chi, g.n}):
                prob = encode_mgc_onehot(g, c)
                energy, states = ground_states(prob.polynomial, prob.num_variables)
                assert energy == chi
                for bits in states:
                    assert check_properties_onehot(prob, bits).all_satisfied()
