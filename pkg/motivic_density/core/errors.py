"""
Errors module.

This module defines the exceptions raised by the motivic density services.
Validation problems found in a dual graph are reported as data by the graph
service; the exceptions below signal inputs an operation cannot evaluate.

@example
```python
from motivic_density.core.errors import UnknownVertex

try:
    graph.vertex('E9')
except UnknownVertex as e:
    print(e.vertex_id)
```
"""


class MotivicDensityError(Exception):
    """Base class for every error raised by the package."""


# Ring arithmetic

class SymbolProductUnsupported(MotivicDensityError):
    """Both factors of a product carry a curve symbol."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f'cannot multiply curve symbols [{left}] and [{right}]')


class InvalidIndex(MotivicDensityError):
    def __init__(self, index):
        self.index = index
        super().__init__(f'geometric factor index must be >= 1, got {index}')


class ClassSyntaxError(MotivicDensityError):
    def __init__(self, text, message):
        self.text = text
        self.message = message
        super().__init__(f'cannot parse motivic class {text!r}: {message}')


# Dual graphs

class GraphSyntaxError(MotivicDensityError):
    """
    Raised when a graph file does not follow the graph file format.

    @property line: The 1-based line of the problem, or None when unknown.
    @property message: A description of the problem.
    """

    def __init__(self, line, message):
        self.line = line
        self.message = message
        where = f'line {line}: ' if line is not None else ''
        super().__init__(f'{where}{message}')


class DuplicateVertexId(MotivicDensityError):
    def __init__(self, vertex_id):
        self.vertex_id = vertex_id
        super().__init__(f'duplicate vertex id {vertex_id!r}')


class UnknownEndpoint(MotivicDensityError):
    def __init__(self, vertex_id, edge):
        self.vertex_id = vertex_id
        self.edge = edge
        super().__init__(f'edge {list(edge)} refers to unknown vertex {vertex_id!r}')


class UnknownVertex(MotivicDensityError):
    def __init__(self, vertex_id):
        self.vertex_id = vertex_id
        super().__init__(f'unknown vertex {vertex_id!r}')


class UnknownEdge(MotivicDensityError):
    def __init__(self, endpoints, occurrence=0):
        self.endpoints = tuple(endpoints)
        self.occurrence = occurrence
        super().__init__(
            f'no edge {list(self.endpoints)} (occurrence {occurrence}) in the graph'
        )


# Blowups

class WrongMode(MotivicDensityError):
    def __init__(self, expected, actual):
        self.expected = expected
        self.actual = actual
        super().__init__(f'operation needs {expected} mode, state is in {actual} mode')


class ScriptSyntaxError(MotivicDensityError):
    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f'line {line}: {message}')


# Density evaluation

class RateNotOne(MotivicDensityError):
    def __init__(self, vertex_id, rate):
        self.vertex_id = vertex_id
        self.rate = rate
        super().__init__(f'vertex {vertex_id!r} has inner rate {rate}, expected 1')


class NonAdmissibleAdjacency(MotivicDensityError):
    """
    Raised when an edge joins two vertices of inner rate 1.

    A component of inner rate 1 only meets components of inner rate > 1, so the
    exponent (q_j - 1) m_j of the neighbor term would vanish.
    """

    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(
            f'vertices {first!r} and {second!r} both have inner rate 1 but are adjacent; '
            'a rate-one component may only meet components of rate > 1'
        )


class InadmissibleGraph(MotivicDensityError):
    """Raised when a graph with validation violations is evaluated."""

    def __init__(self, report):
        self.report = report
        kinds = ', '.join(sorted({v.kind.value for v in report.violations}))
        super().__init__(f'graph has validation violations: {kinds}')


# Oracle

class NoStabilization(MotivicDensityError):
    """
    Raised when a residue-class limit does not stabilize within the budget.

    @property n_max: The largest n that was evaluated.
    @property residue: The residue class that failed.
    @property slowest_decay: The slowest decay rate of the transient terms, or None.
    """

    def __init__(self, n_max, residue, slowest_decay=None, precision=None):
        self.n_max = n_max
        self.residue = residue
        self.slowest_decay = slowest_decay
        self.precision = precision
        hint = ''
        if slowest_decay is not None and precision is not None:
            needed = (precision + 2) / slowest_decay
            hint = (f'; slowest decay rate {slowest_decay}, '
                    f'n_max should exceed about {float(needed):.0f} plus the window')
        super().__init__(
            f'theta did not stabilize for residue {residue} up to n = {n_max}{hint}'
        )


class InvalidModulus(MotivicDensityError):
    def __init__(self, modulus, period):
        self.modulus = modulus
        self.period = period
        super().__init__(f'modulus {modulus} is not a positive multiple of the period {period}')
