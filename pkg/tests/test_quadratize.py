"""HUBO-to-QUBO reduction: gadget exactness, penalties, auxiliary accounting."""

from fractions import Fraction

import pytest
from conftest import complete_graph, path_graph

from qpart.graphs import Graph
from qpart.logenc import encode_mgc_log, lex_penalties
from qpart.onehot import encode_mgc_onehot
from qpart.quadratize import (
    QuadratizationPenalties,
    aux_count_actual,
    aux_count_paper,
    manifold_extension,
    quadratization_penalties,
    quadratize,
    qubit_advantage_predicate,
    verify_quadratization,
)

K2 = complete_graph(2)
P3 = path_graph(3)


class TestQuadratize:
    def test_single_bit_passthrough(self):
        hubo = encode_mgc_log(K2, 2)
        quad = quadratize(hubo)
        assert quad.total_aux == 0
        assert quad.problem.polynomial == hubo.polynomial
        assert quad.problem.kind == "quadratized_log"

    def test_k2_two_bits(self):
        hubo = encode_mgc_log(K2, 4)
        quad = quadratize(hubo)
        assert (quad.aux_product, quad.aux_agreement, quad.aux_chain) == (2, 2, 0)
        assert quad.problem.num_variables == 8
        report = verify_quadratization(hubo, quad)
        assert report.min_over_aux_matches
        assert report.ground_projection_matches
        assert report.num_original_assignments == 16

    def test_single_edge_three_bits_aux_count(self):
        hubo = encode_mgc_log(K2, 8)
        quad = quadratize(hubo)
        assert quad.total_aux == 7
        assert (quad.aux_product, quad.aux_agreement, quad.aux_chain) == (3, 3, 1)

    def test_degree_bounded_everywhere(self):
        for g in (K2, P3, complete_graph(3)):
            for c in (2, 4, 8):
                quad = quadratize(encode_mgc_log(g, c))
                assert quad.problem.polynomial.degree() <= 2

    def test_registry_roles_and_backmap(self):
        hubo = encode_mgc_log(K2, 4)
        quad = quadratize(hubo)
        roles = quad.problem.registry
        assert roles[: quad.num_original_vars] == hubo.registry
        assert "w[0][1]" in roles and "y[0][2]" in roles
        assert quad.problem.meta["backmap"] == list(range(4))
        quad3 = quadratize(encode_mgc_log(K2, 8))
        assert "b[0][1]" in quad3.problem.registry

    def test_deterministic(self):
        a = quadratize(encode_mgc_log(P3, 4))
        b = quadratize(encode_mgc_log(P3, 4))
        assert a.problem.polynomial == b.problem.polynomial
        assert a.problem.registry == b.problem.registry

    def test_rejects_onehot_input(self):
        with pytest.raises(ValueError):
            quadratize(encode_mgc_onehot(K2, 2))


class TestVerification:
    def test_p3_two_bits(self):
        hubo = encode_mgc_log(P3, 4)
        quad = quadratize(hubo)
        report = verify_quadratization(hubo, quad)
        assert report.passed
        assert report.hubo_min == report.qubo_min

    def test_sabotaged_stage1_penalty_detected(self):
        hubo = encode_mgc_log(K2, 4)
        good = quadratize(hubo).penalties
        bad = QuadratizationPenalties(
            m_product=good.m_product, m_stage1=1, m_stage2=good.m_stage2
        )
        report = verify_quadratization(hubo, quadratize(hubo, penalties=bad))
        assert not report.ground_projection_matches

    def test_ground_energy_preserved(self):
        hubo = encode_mgc_log(P3, 4)
        report = verify_quadratization(hubo, quadratize(hubo))
        assert report.hubo_min == 1  # coloring 0,1,0 costs one low bit

    def test_on_manifold_energy_equality(self):
        import itertools

        for g, c in ((K2, 8), (P3, 4)):
            hubo = encode_mgc_log(g, c)
            quad = quadratize(hubo)
            for original in itertools.product((0, 1), repeat=quad.num_original_vars):
                extended = manifold_extension(quad, original)
                assert quad.problem.polynomial.evaluate(extended) == hubo.polynomial.evaluate(
                    original
                )


class TestPenaltyRecord:
    def test_bounds_hold_by_construction(self):
        for g, c in ((K2, 4), (P3, 4), (complete_graph(3), 8)):
            hubo = encode_mgc_log(g, c)
            quad = quadratize(hubo)
            pen = hubo.penalties
            assert quad.penalties.satisfies_bounds(pen.a_adjacency, g.n, pen.total)

    def test_matches_closed_form_for_default_ladder(self):
        # with the explicit ladder, the tier equals 2((n+1)^L - 1) + 2
        for n, l in ((2, 2), (3, 2), (4, 3)):
            pen = lex_penalties(n, l)
            tiers = quadratization_penalties(pen.a_adjacency, n, pen.total)
            assert tiers.m_stage1 == 2 * ((n + 1) ** l - 1) + 2
            assert tiers.m_product == 3 * tiers.m_stage1


class TestAuxCounts:
    def test_paper_formula(self):
        assert aux_count_paper(5, 3) == 20
        assert aux_count_paper(7, 1) == 0

    def test_actual_vs_paper_single_edge(self):
        assert aux_count_paper(1, 2) == 2
        assert aux_count_actual(1, 2) == 4

    def test_actual_matches_construction(self):
        for g, c in ((K2, 4), (P3, 4), (K2, 8), (P3, 8)):
            hubo = encode_mgc_log(g, c)
            quad = quadratize(hubo)
            assert quad.total_aux == aux_count_actual(g.m, hubo.meta["L"])


class TestQubitAdvantage:
    def test_small_example(self):
        advantage, log_count, onehot_count = qubit_advantage_predicate(4, 6, 4)
        assert advantage is True
        assert onehot_count == 20
        assert log_count == 4 * 2 + 6 * 2

    def test_large_true_and_false(self):
        assert qubit_advantage_predicate(100, 600, 64)[0] is True
        assert qubit_advantage_predicate(100, 700, 64)[0] is False

    def test_single_bit_always_true(self):
        advantage, log_count, onehot_count = qubit_advantage_predicate(10, 45, 2)
        assert advantage is True
        assert log_count == 10 and onehot_count == 22

    def test_matches_exact_rational_threshold(self):
        for n in range(2, 30, 3):
            for c in (3, 4, 8, 16):
                for m in range(0, 3 * n, 2):
                    advantage, _, onehot_count = qubit_advantage_predicate(n, m, c)
                    l = max(1, (c - 1).bit_length())
                    expected = m < Fraction(onehot_count - l, 2 * (l - 1))
                    assert advantage == expected

    def test_published_inequality_is_looser_than_count_comparison(self):
        # the published crossover admits points where the published counts
        # do not actually favor the logarithmic encoding
        advantage, log_count, onehot_count = qubit_advantage_predicate(100, 600, 64)
        assert advantage is True
        assert log_count > onehot_count

    def test_rejects_trivial_color_bound(self):
        with pytest.raises(ValueError):
            qubit_advantage_predicate(4, 3, 1)


def test_general_partition_quadratization_with_negative_weights():
    # beta > alpha makes the per-edge product coefficient negative; the
    # penalty tiers must still dominate
    from qpart.logenc import PartitionSpec, encode_general

    g = Graph(2, ((0, 1),))
    spec = PartitionSpec(alpha={(0, 1): 0}, beta={(0, 1): 2}, gap=None)
    hubo = encode_general(g, spec, 2)
    quad = quadratize(hubo)
    report = verify_quadratization(hubo, quad)
    assert report.passed
