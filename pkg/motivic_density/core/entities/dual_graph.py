from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from motivic_density.core.errors import UnknownVertex

"""
Dual graph entity module.

This module defines the weighted dual graph of a resolution: one vertex per exceptional
component carrying its multiplicity m, inner rate q and curve class, and one edge per
intersection point of two components. It also defines the validation report produced
by the graph service.

@example
```python
from fractions import Fraction
from motivic_density.core.entities.dual_graph import DualGraph, Edge, Vertex

graph = DualGraph(
    vertices=(Vertex('v', 2, Fraction(1)), Vertex('w', 3, Fraction(4, 3))),
    edges=(Edge.between('v', 'w'),),
)
```
"""


@dataclass(frozen=True)
class CurveClass:
    """
    The class of an exceptional curve.

    A rational curve has class L + 1. A genus-tagged curve is kept as a free symbol; the
    tag genus:0 marks a rational curve that is kept symbolic until substituted.

    @property genus: None for a rational curve, else the genus tag.
    """
    genus: Optional[int] = None

    @property
    def is_rational(self) -> bool:
        return self.genus is None

    @property
    def tag(self) -> str:
        return 'rational' if self.genus is None else f'genus:{self.genus}'


RATIONAL = CurveClass()


@dataclass(frozen=True)
class Vertex:
    """
    An exceptional component.

    @property id: The vertex id.
    @property m: The multiplicity of the component in the exceptional divisor.
    @property q: The inner rate.
    @property curve_class: The class of the component.
    """
    id: str
    m: int
    q: Fraction
    curve_class: CurveClass = RATIONAL

    @property
    def mq(self) -> Fraction:
        return self.m * self.q


@dataclass(frozen=True)
class Edge:
    """An intersection point between two components; endpoints are stored sorted."""
    endpoints: Tuple[str, str]

    @classmethod
    def between(cls, first: str, second: str) -> 'Edge':
        return cls(tuple(sorted((first, second))))

    @property
    def is_loop(self) -> bool:
        return self.endpoints[0] == self.endpoints[1]

    def other(self, vertex_id: str) -> str:
        first, second = self.endpoints
        return second if vertex_id == first else first

    def touches(self, vertex_id: str) -> bool:
        return vertex_id in self.endpoints


@dataclass(frozen=True)
class DualGraph:
    """
    A weighted dual graph; vertex and edge order follow the input.

    @property vertices: The vertices.
    @property edges: The edges; repeated pairs are distinct intersection points.
    """
    vertices: Tuple[Vertex, ...] = ()
    edges: Tuple[Edge, ...] = ()

    def vertex(self, vertex_id: str) -> Vertex:
        for vertex in self.vertices:
            if vertex.id == vertex_id:
                return vertex
        raise UnknownVertex(vertex_id)

    def has_vertex(self, vertex_id: str) -> bool:
        return any(v.id == vertex_id for v in self.vertices)

    @property
    def vertex_ids(self) -> Tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    def incident_edges(self, vertex_id: str) -> List[Edge]:
        self.vertex(vertex_id)
        return [e for e in self.edges if e.touches(vertex_id)]

    def degree(self, vertex_id: str) -> int:
        """Number of edge endpoints at the vertex; a loop would count twice."""
        return sum(e.endpoints.count(vertex_id) for e in self.incident_edges(vertex_id))

    def neighbors(self, vertex_id: str) -> List[Vertex]:
        """The far endpoint of every incident edge, with repetition."""
        return [self.vertex(e.other(vertex_id)) for e in self.incident_edges(vertex_id)]

    def replace_vertex(self, vertex: Vertex) -> 'DualGraph':
        self.vertex(vertex.id)
        return DualGraph(
            tuple(vertex if v.id == vertex.id else v for v in self.vertices),
            self.edges,
        )

    def without_vertex(self, vertex_id: str) -> 'DualGraph':
        self.vertex(vertex_id)
        return DualGraph(
            tuple(v for v in self.vertices if v.id != vertex_id),
            tuple(e for e in self.edges if not e.touches(vertex_id)),
        )

    def size(self) -> Dict[str, int]:
        return {'vertices': len(self.vertices), 'edges': len(self.edges)}


class ViolationKind(Enum):
    RATE_BELOW_ONE = 'RateBelowOne'
    NON_INTEGRAL_MQ = 'NonIntegralMQ'
    ADJACENT_RATE_ONE = 'AdjacentRateOne'
    LOOP_EDGE = 'LoopEdge'
    UNKNOWN_ENDPOINT = 'UnknownEndpoint'


class WarningKind(Enum):
    NO_RATE_ONE_VERTEX = 'NoRateOneVertex'
    DISCONNECTED = 'Disconnected'


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    subject: Tuple[str, ...]
    message: str


@dataclass(frozen=True)
class ValidationWarning:
    kind: WarningKind
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """
    The outcome of validating a dual graph.

    @property violations: Problems that make the graph inadmissible.
    @property warnings: Observations that do not block evaluation.
    """
    violations: Tuple[Violation, ...] = ()
    warnings: Tuple[ValidationWarning, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> List[str]:
        return [v.kind.value for v in self.violations]
