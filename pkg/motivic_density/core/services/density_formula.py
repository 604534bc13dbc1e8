import logging
from fractions import Fraction
from typing import Iterable, Union

from motivic_density.core.entities.curve_branch import CurveBranchData
from motivic_density.core.entities.dual_graph import DualGraph, Vertex
from motivic_density.core.entities.motivic_class import MotivicClass, RationalFunctionL
from motivic_density.core.errors import InadmissibleGraph, NonAdmissibleAdjacency, RateNotOne
from motivic_density.core.services import graph_service

"""
Density formula module.

Closed-form evaluators. For a surface, every component v of inner rate 1 contributes

    (1/m_v) ( [E_v^0]/(L + 1) + sum over edges {v, j} of T(j) ),

    T(j) = L^-b (1 - L^-1) / ((1 - L^-b)(1 + L^-1)),   b = (q_j - 1) m_j,

with one T(j) per intersection point. For a curve with branch multiplicities N_i the
density is the sum of the 1/N_i.

@example
```python
from motivic_density.core.services.density_formula import surface_density, curve_density

surface_density(e8_graph)   # MotivicClass.unit(Fraction(1, 2))
curve_density([2, 3])       # Fraction(5, 6)
```
"""

logger = logging.getLogger(__name__)


def neighbor_term(neighbor: Vertex) -> RationalFunctionL:
    """Return T(j) for a neighbor j of rate q_j > 1, simplified to (L - 1)/((L^b - 1)(L + 1))."""
    exponent = (neighbor.q - 1) * neighbor.m
    if exponent <= 0 or exponent.denominator != 1:
        raise ValueError(f'neighbor {neighbor.id} has (q - 1) m = {exponent}')
    big = RationalFunctionL.lefschetz_power(int(exponent))
    lefschetz = RationalFunctionL.lefschetz_power(1)
    return (lefschetz - 1) / ((big - 1) * (lefschetz + 1))


def _check_adjacency(g: DualGraph, vertex: Vertex):
    for neighbor in g.neighbors(vertex.id):
        if neighbor.q == 1:
            raise NonAdmissibleAdjacency(vertex.id, neighbor.id)


def vertex_contribution(g: DualGraph, vertex_id: str) -> MotivicClass:
    """
    The contribution of one rate-one component.

    @param g: The graph.
    @param vertex_id: A vertex of inner rate 1.
    @return: (1/m_v) ([E_v^0]/(L + 1) + sum of T(j) over the edges at v).
    @raise UnknownVertex: When the vertex does not exist.
    @raise RateNotOne: When q_v != 1.
    @raise NonAdmissibleAdjacency: When a neighbor also has rate 1.
    """
    vertex = g.vertex(vertex_id)
    if vertex.q != 1:
        raise RateNotOne(vertex_id, vertex.q)
    _check_adjacency(g, vertex)
    lefschetz = RationalFunctionL.lefschetz_power(1)
    bracket = graph_service.e0_class(g, vertex_id).scale(1 / (lefschetz + 1))
    for neighbor in g.neighbors(vertex_id):
        bracket = bracket + MotivicClass.unit(neighbor_term(neighbor))
    return bracket.scale(RationalFunctionL.constant(Fraction(1, vertex.m)))


def surface_density(g: DualGraph) -> MotivicClass:
    """
    Evaluate the surface density of a dual graph.

    @param g: An admissible graph; validation warnings are allowed.
    @return: The reduced class; 0 when no vertex has rate 1.
    @raise NonAdmissibleAdjacency: When an edge joins two rate-one vertices.
    @raise InadmissibleGraph: On any other validation violation.
    """
    for vertex in g.vertices:
        if vertex.q == 1:
            _check_adjacency(g, vertex)
    report = graph_service.validate(g)
    if not report.ok:
        raise InadmissibleGraph(report)
    total = MotivicClass.zero()
    for vertex in g.vertices:
        if vertex.q == 1:
            total = total + vertex_contribution(g, vertex.id)
    logger.debug('surface density over %d vertices computed', len(g.vertices))
    return total


def curve_density(branches: Union[CurveBranchData, Iterable[int]]) -> Fraction:
    """
    Return the curve density: the sum of 1/N_i over the branch multiplicities.

    @raise ValueError: When the list is empty or some N_i < 1.
    """
    if not isinstance(branches, CurveBranchData):
        branches = CurveBranchData.of(branches)
    return sum((Fraction(1, n) for n in branches.mults), Fraction(0))


def branch_jacobian_order(multiplicity: int) -> int:
    """Order of the pulled-back form along a branch of multiplicity N: N - 1."""
    if multiplicity < 1:
        raise ValueError(f'multiplicity must be >= 1, got {multiplicity}')
    return multiplicity - 1
