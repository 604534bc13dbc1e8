import logging
import random
import re
from fractions import Fraction
from typing import Iterable, Iterator, List, Tuple

from motivic_density.core.entities.blowup_state import BlowupMode, BlowupOperation, BlowupState, StateRow
from motivic_density.core.entities.dual_graph import DualGraph, Edge, Vertex
from motivic_density.core.errors import ScriptSyntaxError, UnknownEdge, WrongMode

"""
Blowup engine module.

This module evolves (multiplicity, inner rate, discrepancy) data under point blowups.
A free blowup at a smooth point of E_v adds w with m_w = m_v and q_w = q_v + 1/m_v.
A satellite blowup at a double point E_v, E_v' replaces the edge by w with
m_w = m_v + m_v' and q_w the m-weighted mean of q_v and q_v'. In smooth mode the
discrepancy k follows k_w = k_v + 1 and k_w = k_v + k_v' + 1, which keeps
q = (k + 1)/m - 1 at every vertex.

The engine applies the recursions to any state; it does not certify that the
resolution factors through the Nash transform.

@example
```python
from motivic_density.core.services import blowup_engine as be

state = be.blowup_free(be.init_smooth(), 'E1')
state = be.blowup_satellite(state, ('E1', 'E2'))
be.check_smooth_identity(state)   # True
```
"""

logger = logging.getLogger(__name__)

_ID = re.compile(r'E(\d+)')


def init_smooth() -> BlowupState:
    """The first blowup of a smooth surface point: E1 with m = 1, q = 1, k = 1."""
    graph = DualGraph((Vertex('E1', 1, Fraction(1)),), ())
    return BlowupState(graph, (('E1', 1),), BlowupMode.SMOOTH)


def general_state(graph: DualGraph) -> BlowupState:
    return BlowupState(graph, (), BlowupMode.GENERAL)


def _next_id(graph: DualGraph) -> str:
    used = set(graph.vertex_ids)
    numbers = [int(m.group(1)) for m in map(_ID.fullmatch, used) if m]
    candidate = max(numbers, default=0) + 1
    while f'E{candidate}' in used:
        candidate += 1
    return f'E{candidate}'


def blowup_free(s: BlowupState, vertex_id: str) -> BlowupState:
    """
    Blow up a smooth point of the divisor on E_v.

    @param s: The state.
    @param vertex_id: The vertex v.
    @return: The new state with w attached to v only.
    @raise UnknownVertex: When v does not exist.
    """
    vertex = s.graph.vertex(vertex_id)
    new_id = _next_id(s.graph)
    created = Vertex(new_id, vertex.m, vertex.q + Fraction(1, vertex.m))
    graph = DualGraph(s.graph.vertices + (created,), s.graph.edges + (Edge.between(vertex_id, new_id),))
    k = s.k
    if s.mode is BlowupMode.SMOOTH:
        k = k + ((new_id, s.discrepancy(vertex_id) + 1),)
    return BlowupState(graph, k, s.mode)


def blowup_satellite(s: BlowupState, endpoints: Tuple[str, str], occurrence: int = 0) -> BlowupState:
    """
    Blow up the double point of an edge.

    @param s: The state.
    @param endpoints: The two endpoints of the edge.
    @param occurrence: Which parallel edge between the endpoints, counted from 0.
    @return: The new state; the edge is replaced by edges through w.
    @raise UnknownEdge: When the edge does not exist.
    """
    target = Edge.between(*endpoints)
    positions = [i for i, e in enumerate(s.graph.edges) if e == target and not e.is_loop]
    if occurrence < 0 or occurrence >= len(positions):
        raise UnknownEdge(endpoints, occurrence)
    first, second = (s.graph.vertex(v) for v in target.endpoints)

    m = first.m + second.m
    q = (first.mq + second.mq) / m
    new_id = _next_id(s.graph)
    removed = positions[occurrence]
    edges = s.graph.edges[:removed] + s.graph.edges[removed + 1:]
    edges += (Edge.between(first.id, new_id), Edge.between(second.id, new_id))
    graph = DualGraph(s.graph.vertices + (Vertex(new_id, m, q),), edges)

    k = s.k
    if s.mode is BlowupMode.SMOOTH:
        k = k + ((new_id, s.discrepancy(first.id) + s.discrepancy(second.id) + 1),)
    return BlowupState(graph, k, s.mode)


def mather_log(s: BlowupState, vertex_id: str) -> Fraction:
    """
    Return the Mather log-discrepancy m_v (q_v + 1).

    @param s: The state.
    @param vertex_id: The vertex.
    @return: The value; integral whenever m q is.
    @raise UnknownVertex: When the vertex does not exist.
    """
    vertex = s.graph.vertex(vertex_id)
    return vertex.m * (vertex.q + 1)


def mather(s: BlowupState, vertex_id: str) -> Fraction:
    """
    Return the Mather discrepancy m_v (q_v + 1) - 1.

    @param s: The state.
    @param vertex_id: The vertex.
    @return: The value; equal to k_v for states grown from a smooth point.
    @raise UnknownVertex: When the vertex does not exist.
    """
    return mather_log(s, vertex_id) - 1


def check_smooth_identity(s: BlowupState) -> bool:
    """
    Check q = (k + 1)/m - 1 at every vertex.

    @raise WrongMode: When the state is in general mode.
    """
    if s.mode is not BlowupMode.SMOOTH:
        raise WrongMode(BlowupMode.SMOOTH.value, s.mode.value)
    k = s.discrepancies()
    return all(
        v.id in k and v.q == Fraction(k[v.id] + 1, v.m) - 1
        for v in s.graph.vertices
    )


def apply_operation(s: BlowupState, op: BlowupOperation) -> BlowupState:
    if op.kind == 'free':
        return blowup_free(s, op.vertices[0])
    return blowup_satellite(s, op.vertices, op.occurrence)


def iterate_script(s: BlowupState, ops: Iterable[BlowupOperation]) -> Iterator[BlowupState]:
    """Yield the state after every operation."""
    for op in ops:
        s = apply_operation(s, op)
        logger.debug('%s -> %d vertices', op, len(s.graph.vertices))
        yield s


def apply_script(s: BlowupState, ops: Iterable[BlowupOperation]) -> BlowupState:
    for s in iterate_script(s, ops):
        pass
    return s


def parse_script(text: str) -> List[BlowupOperation]:
    """
    Parse a blowup script.

    One operation per line: "free <id>" or "satellite <idA> <idB> [occurrence]".
    Blank lines and text after '#' are ignored.

    @param text: The script.
    @return: The operations in order.
    @raise ScriptSyntaxError: On the first malformed line.
    """
    ops = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split('#', 1)[0].split()
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]
        if keyword == 'free':
            if len(args) != 1:
                raise ScriptSyntaxError(number, 'expected "free <vertex-id>"')
            ops.append(BlowupOperation.free(args[0], number))
        elif keyword == 'satellite':
            if len(args) not in (2, 3):
                raise ScriptSyntaxError(number, 'expected "satellite <idA> <idB> [occurrence]"')
            occurrence = 0
            if len(args) == 3:
                if not args[2].isdigit():
                    raise ScriptSyntaxError(number, f'occurrence {args[2]!r} is not a non-negative integer')
                occurrence = int(args[2])
            ops.append(BlowupOperation.satellite(args[0], args[1], occurrence, number))
        else:
            raise ScriptSyntaxError(number, f'unknown operation {keyword!r}')
    return ops


def _random_step(s: BlowupState, rng: random.Random) -> BlowupOperation:
    edges = [e for e in s.graph.edges if not e.is_loop]
    if edges and rng.random() >= 0.5:
        index = rng.randrange(len(edges))
        edge = edges[index]
        occurrence = sum(1 for e in edges[:index] if e == edge)
        return BlowupOperation.satellite(*edge.endpoints, occurrence)
    return BlowupOperation.free(rng.choice(s.graph.vertex_ids))


def random_walk(steps: int, seed: int) -> List[Tuple[BlowupOperation, BlowupState]]:
    """
    Run a reproducible random blowup sequence from init_smooth.

    Each step is a free blowup at a random vertex, or with probability 1/2 when an
    edge exists a satellite blowup at a random edge.

    @param steps: The number of blowups.
    @param seed: The seed of the random generator.
    @return: (operation, state after it) pairs.
    """
    rng = random.Random(seed)
    s = init_smooth()
    history = []
    for _ in range(steps):
        op = _random_step(s, rng)
        s = apply_operation(s, op)
        history.append((op, s))
    return history


def random_operations(steps: int, seed: int) -> List[BlowupOperation]:
    return [op for op, _ in random_walk(steps, seed)]


def state_table(s: BlowupState) -> List[StateRow]:
    k = s.discrepancies()
    return [
        StateRow(v.id, v.m, v.q, k.get(v.id), mather_log(s, v.id))
        for v in s.graph.vertices
    ]
