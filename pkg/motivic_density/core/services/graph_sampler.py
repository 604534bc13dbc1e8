import random
from fractions import Fraction

from motivic_density.core.entities.dual_graph import DualGraph, Edge, Vertex

"""
Graph sampler module.

Random admissible dual graphs for the formula/oracle cross-check: a random tree on at
most max_vertices vertices, at least one vertex of inner rate 1, no two adjacent
vertices of rate 1, q in [1, max_rate] with m q integral.

@example
```python
import random
from motivic_density.core.services.graph_sampler import random_admissible_graph

graph = random_admissible_graph(random.Random(7))
```
"""


def _random_rate(rng: random.Random, m: int, max_rate: int) -> Fraction:
    # q = 1 + t/m keeps m q integral
    return 1 + Fraction(rng.randint(1, (max_rate - 1) * m), m)


def random_admissible_graph(rng: random.Random, max_vertices: int = 6, max_multiplicity: int = 6,
                            max_rate: int = 3, extra_edges: int = 0) -> DualGraph:
    """
    Draw a random admissible graph.

    @param rng: The random generator; the graph is a function of its state.
    @param max_vertices: Upper bound on the number of vertices (at least 1).
    @param max_multiplicity: Upper bound on every m.
    @param max_rate: Upper bound on every q (at least 2).
    @param extra_edges: Parallel edges added between a rate-one vertex and a neighbor.
    @return: The graph, vertices named v1, v2, ...
    """
    if max_vertices < 1 or max_multiplicity < 1 or max_rate < 2:
        raise ValueError('need max_vertices >= 1, max_multiplicity >= 1 and max_rate >= 2')
    count = rng.randint(1, max_vertices)
    vertices = []
    edges = []
    for index in range(count):
        vertex_id = f'v{index + 1}'
        m = rng.randint(1, max_multiplicity)
        parent = vertices[rng.randrange(index)] if index else None
        rate_one_allowed = parent is None or parent.q != 1
        if index == 0 or (rate_one_allowed and rng.random() < 0.4):
            q = Fraction(1)
        else:
            q = _random_rate(rng, m, max_rate)
        vertex = Vertex(vertex_id, m, q)
        vertices.append(vertex)
        if parent is not None:
            edges.append(Edge.between(parent.id, vertex_id))

    rates = {v.id: v.q for v in vertices}
    candidates = [e for e in edges if any(rates[i] == 1 for i in e.endpoints)]
    for _ in range(extra_edges if candidates else 0):
        edges.append(rng.choice(candidates))
    return DualGraph(tuple(vertices), tuple(edges))
