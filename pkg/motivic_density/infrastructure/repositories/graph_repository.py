import json
import logging
import math
import re
from fractions import Fraction
from typing import List, Optional, Union

from injector import inject
from pydantic import BaseModel, Extra, Field, StrictInt, StrictStr, ValidationError, conlist, validator

from motivic_density.core.entities.dual_graph import CurveClass, DualGraph, Edge, RATIONAL, Vertex
from motivic_density.core.errors import DuplicateVertexId, GraphSyntaxError, UnknownEndpoint
from motivic_density.core.interfaces.graph_storage_interface import GraphStorageInterface

"""
Graph Repository module.

This module reads and writes dual graphs in the graph file format, a JSON object

    {"vertices": [{"id": str, "m": int, "q": "p/r" or int, "class": "rational" | "genus:<g>"}],
     "edges": [["idA", "idB"], ...]}

The file schema is checked with pydantic models; referential integrity (unique ids,
known endpoints) is checked here, semantic admissibility is left to the graph service.

@example
```python
from motivic_density.infrastructure.repositories.graph_repository import GraphRepository

repository = GraphRepository(storage_service)
graph = repository.load_graph('e8.graph')
```
"""

logger = logging.getLogger(__name__)

_RATIONAL = re.compile(r'\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?')
_GENUS = re.compile(r'genus:(\d+)')


class VertexModel(BaseModel):
    id: StrictStr
    m: StrictInt
    q: Union[StrictInt, StrictStr]
    curve_class: StrictStr = Field('rational', alias='class')

    class Config:
        extra = Extra.forbid
        allow_population_by_field_name = True

    @validator('id')
    def id_not_blank(cls, value):
        if not value.strip():
            raise ValueError('vertex id must not be empty')
        return value

    @validator('m')
    def m_positive(cls, value):
        if value < 1:
            raise ValueError('multiplicity m must be >= 1')
        return value

    @validator('curve_class')
    def known_class(cls, value):
        if value != 'rational' and not _GENUS.fullmatch(value):
            raise ValueError('class must be "rational" or "genus:<g>"')
        return value


class GraphModel(BaseModel):
    vertices: List[VertexModel]
    edges: List[conlist(StrictStr, min_items=2, max_items=2)] = []

    class Config:
        extra = Extra.forbid


def parse_rate(value: Union[int, str]) -> Fraction:
    """
    Parse an inner rate written as an integer or a "p/r" string in lowest terms.

    @param value: The raw value from the file.
    @return: The positive rational.
    @raise ValueError: When the value is malformed, not reduced or not positive.
    """
    if isinstance(value, int):
        rate = Fraction(value)
    else:
        match = _RATIONAL.fullmatch(value)
        if not match:
            raise ValueError(f'inner rate {value!r} is not an integer or "p/r"')
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise ValueError(f'inner rate {value!r} has a zero denominator')
        if math.gcd(numerator, denominator) != 1:
            raise ValueError(f'inner rate {value!r} is not in lowest terms')
        rate = Fraction(numerator, denominator)
    if rate <= 0:
        raise ValueError(f'inner rate {value!r} must be positive')
    return rate


def format_rate(rate: Fraction) -> Union[int, str]:
    return rate.numerator if rate.denominator == 1 else f'{rate.numerator}/{rate.denominator}'


def _curve_class(tag: str) -> CurveClass:
    match = _GENUS.fullmatch(tag)
    return CurveClass(int(match.group(1))) if match else RATIONAL


def graph_from_payload(payload, line: Optional[int] = None) -> DualGraph:
    """
    Build a graph from an already decoded JSON object.

    @param payload: The decoded object.
    @param line: Line number reported with schema errors, when known.
    @return: The structurally valid graph.
    @raise GraphSyntaxError: When the object does not follow the schema.
    @raise DuplicateVertexId: When two vertices share an id.
    @raise UnknownEndpoint: When an edge names a missing vertex.
    """
    if not isinstance(payload, dict):
        raise GraphSyntaxError(line, 'top level must be an object with "vertices" and "edges"')
    try:
        model = GraphModel.parse_obj(payload)
    except ValidationError as e:
        first = e.errors()[0]
        where = '.'.join(str(part) for part in first['loc'])
        raise GraphSyntaxError(line, f'{where}: {first["msg"]}') from e

    vertices = []
    seen = set()
    for item in model.vertices:
        if item.id in seen:
            raise DuplicateVertexId(item.id)
        seen.add(item.id)
        try:
            rate = parse_rate(item.q)
        except ValueError as e:
            raise GraphSyntaxError(line, f'vertex {item.id!r}: {e}') from e
        vertices.append(Vertex(item.id, item.m, rate, _curve_class(item.curve_class)))

    edges = []
    for first, second in model.edges:
        for endpoint in (first, second):
            if endpoint not in seen:
                raise UnknownEndpoint(endpoint, (first, second))
        edges.append(Edge.between(first, second))
    return DualGraph(tuple(vertices), tuple(edges))


def parse_graph(text: str) -> DualGraph:
    """
    Parse a graph file.

    @param text: The file content.
    @return: The structurally valid graph.
    @raise GraphSyntaxError: With the decoder's line number for malformed JSON.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphSyntaxError(e.lineno, e.msg) from e
    return graph_from_payload(payload)


def graph_to_payload(g: DualGraph) -> dict:
    return {
        'vertices': [
            {'id': v.id, 'm': v.m, 'q': format_rate(v.q), 'class': v.curve_class.tag}
            for v in g.vertices
        ],
        'edges': [list(e.endpoints) for e in g.edges],
    }


def serialize_graph(g: DualGraph) -> str:
    """Write a graph in the graph file format; vertex and edge order are kept."""
    return json.dumps(graph_to_payload(g), indent=2) + '\n'


class GraphRepository:
    """
    Repository for dual graph files.

    @method load_graph: Read and parse a graph file.
    @method save_graph: Serialize a graph into a file.
    @method list_graphs: List the graph files under the storage root.
    """

    @inject
    def __init__(self, storage_service: GraphStorageInterface):
        """
        Initialize the repository with its dependencies.

        @param storage_service: The storage the graph files live in.
        """
        self.storage_service = storage_service

    def load_graph(self, name) -> DualGraph:
        """
        Read and parse a graph file.

        @param name: The file name, relative to the storage root or absolute.
        @return: The parsed graph.
        @raise OSError: When the file cannot be read.
        """
        text = self.storage_service.read_text(name)
        graph = parse_graph(text)
        logger.debug('loaded %s: %d vertices, %d edges', name, len(graph.vertices), len(graph.edges))
        return graph

    def save_graph(self, name, graph: DualGraph):
        self.storage_service.write_text(name, serialize_graph(graph))

    def list_graphs(self) -> List[str]:
        return sorted(self.storage_service.list_names('.graph'))
