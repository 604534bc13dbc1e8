import unittest
from fractions import Fraction

import pytest

from motivic_density.core.entities.blowup_state import BlowupMode, BlowupOperation, BlowupState
from motivic_density.core.entities.dual_graph import DualGraph, Edge, Vertex
from motivic_density.core.errors import ScriptSyntaxError, UnknownEdge, UnknownVertex, WrongMode
from motivic_density.core.services import blowup_engine as be
from motivic_density.core.services import graph_service
from tests import load_fixture


class TestSmoothBlowups(unittest.TestCase):
    """Test cases for blowups starting at a smooth surface point."""

    def test_init_smooth(self):
        state = be.init_smooth()
        self.assertEqual(state.mode, BlowupMode.SMOOTH)
        self.assertEqual(state.graph.vertices, (Vertex('E1', 1, Fraction(1)),))
        self.assertEqual(state.discrepancy('E1'), 1)
        self.assertTrue(graph_service.validate(state.graph).ok)
        self.assertEqual(be.mather_log(state, 'E1'), 2)
        self.assertTrue(be.check_smooth_identity(state))

    def test_free_blowup(self):
        state = be.blowup_free(be.init_smooth(), 'E1')
        self.assertEqual(state.graph.vertex('E2'), Vertex('E2', 1, Fraction(2)))
        self.assertEqual(state.discrepancy('E2'), 2)
        self.assertEqual(state.graph.edges, (Edge.between('E1', 'E2'),))
        self.assertEqual(be.mather_log(state, 'E2'), 3)

    def test_satellite_blowup(self):
        state = be.blowup_satellite(be.blowup_free(be.init_smooth(), 'E1'), ('E1', 'E2'))
        self.assertEqual(state.graph.vertex('E3'), Vertex('E3', 2, Fraction(3, 2)))
        self.assertEqual(state.discrepancy('E3'), 4)
        self.assertEqual(set(state.graph.edges), {Edge.between('E1', 'E3'), Edge.between('E2', 'E3')})
        self.assertTrue(be.check_smooth_identity(state))

    def test_unknown_vertex(self):
        with self.assertRaises(UnknownVertex):
            be.blowup_free(be.init_smooth(), 'E9')

    def test_unknown_edge(self):
        state = be.blowup_free(be.init_smooth(), 'E1')
        with self.assertRaises(UnknownEdge):
            be.blowup_satellite(state, ('E1', 'E3'))
        with self.assertRaises(UnknownEdge):
            be.blowup_satellite(state, ('E1', 'E2'), occurrence=1)

    def test_perturbed_discrepancy_breaks_identity(self):
        state = be.blowup_free(be.init_smooth(), 'E1')
        broken = BlowupState(state.graph, (('E1', 1), ('E2', 3)), BlowupMode.SMOOTH)
        self.assertFalse(be.check_smooth_identity(broken))

    def test_identity_needs_smooth_mode(self):
        with self.assertRaises(WrongMode):
            be.check_smooth_identity(be.general_state(load_fixture('e8.graph')))

    def test_mather(self):
        state = be.init_smooth()
        self.assertEqual(be.mather(state, 'E1'), 1)


class TestGeneralBlowups(unittest.TestCase):
    """Test cases for blowups on arbitrary graphs."""

    def test_free_on_general_vertex(self):
        state = be.general_state(DualGraph((Vertex('a', 2, Fraction(3, 2)),), ()))
        state = be.blowup_free(state, 'a')
        self.assertEqual(state.graph.vertex('E1'), Vertex('E1', 2, Fraction(2)))
        self.assertIsNone(state.discrepancy('E1'))
        self.assertEqual(state.k, ())

    def test_symmetric_satellite(self):
        graph = DualGraph((Vertex('a', 3, Fraction(4, 3)), Vertex('b', 3, Fraction(4, 3))),
                          (Edge.between('a', 'b'),))
        state = be.blowup_satellite(be.general_state(graph), ('a', 'b'))
        self.assertEqual(state.graph.vertex('E1'), Vertex('E1', 6, Fraction(4, 3)))

    def test_satellite_on_parallel_edge(self):
        graph = DualGraph((Vertex('a', 1, Fraction(1)), Vertex('b', 1, Fraction(2))),
                          (Edge.between('a', 'b'), Edge.between('a', 'b')))
        state = be.blowup_satellite(be.general_state(graph), ('b', 'a'), occurrence=1)
        self.assertEqual(state.graph.edges.count(Edge.between('a', 'b')), 1)
        self.assertEqual(state.graph.degree('E1'), 2)

    def test_fresh_ids_skip_used_names(self):
        graph = DualGraph((Vertex('E1', 1, Fraction(1)), Vertex('E3', 1, Fraction(2)), Vertex('x', 1, Fraction(2))),
                          ())
        state = be.blowup_free(be.general_state(graph), 'x')
        self.assertTrue(state.graph.has_vertex('E4'))

    def test_mather_log_on_e8(self):
        state = be.general_state(load_fixture('e8.graph'))
        self.assertEqual(be.mather_log(state, 'v7'), 4)
        self.assertEqual(be.mather_log(state, 'v6'), 7)


class TestScripts(unittest.TestCase):
    """Test cases for blowup scripts."""

    def test_parse_script(self):
        ops = be.parse_script('# start\nfree E1\n\nsatellite E1 E2   # first satellite\nsatellite E1 E3 1\n')
        self.assertEqual(ops, [
            BlowupOperation.free('E1', 2),
            BlowupOperation.satellite('E1', 'E2', 0, 4),
            BlowupOperation.satellite('E1', 'E3', 1, 5),
        ])
        self.assertEqual([str(op) for op in ops], ['free E1', 'satellite E1 E2', 'satellite E1 E3 1'])

    def test_script_errors(self):
        cases = {
            'free': 1,
            'free E1 E2': 1,
            'free E1\nsatellite E1': 2,
            'free E1\nsatellite E1 E2 x': 2,
            'free E1\n\nexplode E1': 3,
        }
        for text, line in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(ScriptSyntaxError) as ctx:
                    be.parse_script(text)
                self.assertEqual(ctx.exception.line, line)

    def test_apply_script(self):
        ops = be.parse_script('free E1\nsatellite E1 E2\nsatellite E2 E3\n')
        state = be.apply_script(be.init_smooth(), ops)
        self.assertEqual(state.graph.vertex('E4'), Vertex('E4', 3, Fraction(5, 3)))
        self.assertEqual(state.discrepancy('E4'), 7)
        self.assertTrue(be.check_smooth_identity(state))

    def test_iterate_script_yields_every_state(self):
        ops = be.parse_script('free E1\nfree E2\n')
        states = list(be.iterate_script(be.init_smooth(), ops))
        self.assertEqual([len(s.graph.vertices) for s in states], [2, 3])

    def test_state_table(self):
        state = be.blowup_free(be.init_smooth(), 'E1')
        rows = be.state_table(state)
        self.assertEqual([(r.id, r.m, r.q, r.k, r.mather_log) for r in rows],
                         [('E1', 1, 1, 1, 2), ('E2', 1, 2, 2, 3)])


class TestRandomBlowups:
    """Property tests over seeded random blowup sequences."""

    @pytest.mark.parametrize('seed', range(500))
    def test_discrepancy_identity_after_every_step(self, seed):
        for op, state in be.random_walk(30, seed):
            assert be.check_smooth_identity(state), f'identity broken after {op}'
            k = state.discrepancies()
            for vertex in state.graph.vertices:
                assert be.mather_log(state, vertex.id) == k[vertex.id] + 1
                assert vertex.mq.denominator == 1
                assert vertex.q >= 1

    def test_random_walk_is_reproducible(self):
        assert be.random_operations(30, 7) == be.random_operations(30, 7)
        assert be.random_operations(30, 7) != be.random_operations(30, 8)

    def test_random_states_validate(self):
        for _, state in be.random_walk(30, 11):
            assert graph_service.validate(state.graph).ok
