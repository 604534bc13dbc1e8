import math
from fractions import Fraction
from typing import Dict, List

import networkx as nx

from motivic_density.core.entities.dual_graph import (
    DualGraph,
    ValidationReport,
    ValidationWarning,
    Vertex,
    Violation,
    ViolationKind,
    WarningKind,
)
from motivic_density.core.entities.motivic_class import ClassSymbol, MotivicClass, RationalFunctionL
from motivic_density.core.services.motivic_ring import mc_substitute

"""
Graph service module.

This module holds the semantic operations on dual graphs: validation against the
admissibility rules, the class of a punctured component, the period of the graph and
the substitution of symbolic rational curves.

@example
```python
from motivic_density.core.services import graph_service

report = graph_service.validate(graph)
if report.ok:
    e = graph_service.period(graph)
```
"""


def curve_symbol(vertex: Vertex) -> ClassSymbol:
    return ClassSymbol.curve(vertex.id, vertex.curve_class.tag)


def curve_class_of(vertex: Vertex) -> MotivicClass:
    """Return [E_v]: (L + 1) for a rational curve, the vertex symbol otherwise."""
    if vertex.curve_class.is_rational:
        return MotivicClass.unit(RationalFunctionL.lefschetz_power(1) + 1)
    return MotivicClass.of_symbol(curve_symbol(vertex))


def to_networkx(g: DualGraph) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(g.vertex_ids)
    graph.add_edges_from(e.endpoints for e in g.edges)
    return graph


def validate(g: DualGraph) -> ValidationReport:
    """
    Check a dual graph against the admissibility rules.

    Violations: RateBelowOne (q < 1), NonIntegralMQ (m q not an integer), LoopEdge,
    AdjacentRateOne (an edge between two vertices of rate 1) and UnknownEndpoint for graphs
    built in code whose edges name a missing vertex. Warnings: NoRateOneVertex
    and Disconnected.

    @param g: The graph.
    @return: The validation report; never raises for graph content.
    """
    violations: List[Violation] = []
    for vertex in g.vertices:
        if vertex.q < 1:
            violations.append(Violation(
                ViolationKind.RATE_BELOW_ONE, (vertex.id,),
                f'vertex {vertex.id} has inner rate {vertex.q} < 1',
            ))
        if vertex.mq.denominator != 1:
            violations.append(Violation(
                ViolationKind.NON_INTEGRAL_MQ, (vertex.id,),
                f'vertex {vertex.id} has m*q = {vertex.mq}, not an integer',
            ))
    rates: Dict[str, Fraction] = {v.id: v.q for v in g.vertices}
    for edge in g.edges:
        first, second = edge.endpoints
        missing = [endpoint for endpoint in edge.endpoints if endpoint not in rates]
        if missing:
            violations.append(Violation(
                ViolationKind.UNKNOWN_ENDPOINT, edge.endpoints,
                f'edge {first}-{second} names missing vertex {missing[0]}',
            ))
        elif edge.is_loop:
            violations.append(Violation(
                ViolationKind.LOOP_EDGE, edge.endpoints, f'edge {first}-{second} is a loop',
            ))
        elif rates[first] == 1 and rates[second] == 1:
            violations.append(Violation(
                ViolationKind.ADJACENT_RATE_ONE, edge.endpoints,
                f'edge {first}-{second} joins two vertices of inner rate 1',
            ))

    warnings: List[ValidationWarning] = []
    if not any(v.q == 1 for v in g.vertices):
        warnings.append(ValidationWarning(
            WarningKind.NO_RATE_ONE_VERTEX, 'no vertex has inner rate 1; the density is 0',
        ))
    components = nx.number_connected_components(to_networkx(g)) if g.vertices else 0
    if components > 1:
        warnings.append(ValidationWarning(
            WarningKind.DISCONNECTED, f'graph has {components} connected components',
        ))
    return ValidationReport(tuple(violations), tuple(warnings))


def e0_class(g: DualGraph, vertex_id: str) -> MotivicClass:
    """
    Return [E_v^0]: the class of the component minus one point per incident edge end.

    @param g: The graph.
    @param vertex_id: The vertex id.
    @return: [E_v] - deg(v)
    @raise UnknownVertex: When the vertex does not exist.
    """
    vertex = g.vertex(vertex_id)
    return curve_class_of(vertex) - MotivicClass.unit(g.degree(vertex_id))


def period(g: DualGraph) -> int:
    """
    Return the period e of the graph: the lcm of the vertex multiplicities.

    Every gcd(m_v, m_w) over an edge divides it as well.

    @param g: The graph.
    @return: The period; 1 for the empty graph.
    """
    return math.lcm(*(v.m for v in g.vertices)) if g.vertices else 1


def rationalize(g: DualGraph, a: MotivicClass) -> MotivicClass:
    """Substitute L + 1 for the symbol of every genus-0 vertex of g in a."""
    rational = MotivicClass.unit(RationalFunctionL.lefschetz_power(1) + 1)
    mapping = {
        curve_symbol(v): rational for v in g.vertices if v.curve_class.genus == 0
    }
    return mc_substitute(a, mapping)
