import unittest
from fractions import Fraction

import pytest

from motivic_density.core.entities.dual_graph import (
    CurveClass,
    DualGraph,
    Edge,
    Vertex,
    ViolationKind,
    WarningKind,
)
from motivic_density.core.entities.motivic_class import ClassSymbol, MotivicClass, RationalFunctionL
from motivic_density.core.errors import UnknownVertex
from motivic_density.core.services import graph_service
from tests import load_fixture

LEF = RationalFunctionL.lefschetz_power(1)


def graph(vertices, edges=()):
    return DualGraph(
        tuple(Vertex(i, m, Fraction(q), c) for i, m, q, c in vertices),
        tuple(Edge.between(a, b) for a, b in edges),
    )


R = CurveClass()


class TestValidate(unittest.TestCase):
    """Test cases for graph validation."""

    def test_fixtures_are_admissible(self):
        for name in ('e8.graph', 'smooth.graph', 'twovertex.graph', 'example64.graph', 'symbolic.graph'):
            with self.subTest(name=name):
                report = graph_service.validate(load_fixture(name))
                self.assertTrue(report.ok)
                self.assertEqual(report.warnings, ())

    def test_rate_below_one(self):
        report = graph_service.validate(graph([('a', 4, Fraction(3, 4), R)]))
        self.assertFalse(report.ok)
        self.assertIn('RateBelowOne', report.kinds())
        self.assertEqual(report.violations[0].subject, ('a',))

    def test_non_integral_mq(self):
        report = graph_service.validate(graph([('a', 2, Fraction(4, 3), R)]))
        self.assertEqual(report.kinds(), ['NonIntegralMQ'])

    def test_adjacent_rate_one(self):
        report = graph_service.validate(graph([('a', 1, 1, R), ('b', 2, 1, R)], [('a', 'b')]))
        self.assertEqual(report.kinds(), ['AdjacentRateOne'])
        self.assertEqual(report.violations[0].kind, ViolationKind.ADJACENT_RATE_ONE)

    def test_loop(self):
        report = graph_service.validate(graph([('a', 1, 1, R)], [('a', 'a')]))
        self.assertEqual(report.kinds(), ['LoopEdge'])

    def test_edge_to_missing_vertex(self):
        report = graph_service.validate(graph([('a', 1, 1, R)], [('a', 'z')]))

        self.assertEqual(report.kinds(), ['UnknownEndpoint'])
        self.assertEqual(report.violations[0].subject, ('a', 'z'))
        self.assertIn('z', report.violations[0].message)

    def test_warnings(self):
        report = graph_service.validate(graph([('a', 1, 2, R), ('b', 1, 3, R)]))
        self.assertTrue(report.ok)
        self.assertEqual([w.kind for w in report.warnings],
                         [WarningKind.NO_RATE_ONE_VERTEX, WarningKind.DISCONNECTED])

    def test_empty_graph(self):
        report = graph_service.validate(DualGraph())
        self.assertTrue(report.ok)
        self.assertEqual([w.kind for w in report.warnings], [WarningKind.NO_RATE_ONE_VERTEX])


class TestGraphQueries(unittest.TestCase):
    """Test cases for the derived graph quantities."""

    def setUp(self):
        self.e8 = load_fixture('e8.graph')

    def test_e0_class(self):
        self.assertEqual(graph_service.e0_class(self.e8, 'v7'), MotivicClass.unit(LEF))
        self.assertEqual(graph_service.e0_class(self.e8, 'v3'), MotivicClass.unit(LEF - 2))

    def test_e0_class_symbolic(self):
        g = load_fixture('symbolic.graph')
        symbol = ClassSymbol.curve('v')
        self.assertEqual(graph_service.e0_class(g, 'v'), MotivicClass.of_symbol(symbol) - 1)

    def test_e0_class_unknown_vertex(self):
        with self.assertRaises(UnknownVertex):
            graph_service.e0_class(self.e8, 'v9')

    def test_period(self):
        self.assertEqual(graph_service.period(self.e8), 60)
        self.assertEqual(graph_service.period(load_fixture('twovertex.graph')), 6)
        self.assertEqual(graph_service.period(load_fixture('example64.graph')), 20)
        self.assertEqual(graph_service.period(DualGraph()), 1)

    def test_networkx_view(self):
        nx_graph = graph_service.to_networkx(self.e8)
        self.assertEqual(nx_graph.number_of_nodes(), 8)
        self.assertEqual(nx_graph.number_of_edges(), 7)

    def test_rationalize(self):
        g = load_fixture('symbolic.graph')
        x = MotivicClass.of_symbol(ClassSymbol.curve('v'), 1 / (LEF + 1))
        self.assertEqual(graph_service.rationalize(g, x), MotivicClass.unit(1))

    def test_rationalize_leaves_higher_genus(self):
        g = graph([('a', 1, 1, CurveClass(1))])
        x = MotivicClass.of_symbol(ClassSymbol.curve('a'))
        self.assertEqual(graph_service.rationalize(g, x), x)


class TestDualGraph:
    """Test cases for the DualGraph entity."""

    @pytest.fixture
    def chain(self):
        return graph([('a', 1, 1, R), ('b', 2, Fraction(3, 2), R), ('c', 1, 2, R)],
                     [('a', 'b'), ('b', 'c'), ('a', 'b')])

    def test_neighbors_with_repetition(self, chain):
        assert [v.id for v in chain.neighbors('a')] == ['b', 'b']
        assert chain.degree('b') == 3

    def test_without_vertex(self, chain):
        smaller = chain.without_vertex('b')
        assert smaller.vertex_ids == ('a', 'c')
        assert smaller.edges == ()

    def test_replace_vertex(self, chain):
        updated = chain.replace_vertex(Vertex('c', 1, Fraction(3)))
        assert updated.vertex('c').q == 3
        assert updated.edges == chain.edges

    def test_unknown_vertex(self, chain):
        with pytest.raises(UnknownVertex):
            chain.neighbors('z')
        assert not chain.has_vertex('z')

    def test_edge_helpers(self):
        edge = Edge.between('b', 'a')
        assert edge.endpoints == ('a', 'b')
        assert edge.other('a') == 'b'
        assert not edge.is_loop
        assert graph([('a', 1, 1, R)]).size() == {'vertices': 1, 'edges': 0}
