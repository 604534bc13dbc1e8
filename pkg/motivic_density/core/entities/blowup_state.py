from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple

from motivic_density.core.entities.dual_graph import DualGraph

"""
Blowup state entity module.

This module defines the state evolved by the blowup engine: a dual graph plus, in
smooth mode, the discrepancy k of every vertex. It also defines the operations a
blowup script is made of and the rows of the state table.

@example
```python
from motivic_density.core.entities.blowup_state import BlowupOperation

op = BlowupOperation.satellite('E1', 'E2')
```
"""


class BlowupMode(Enum):
    SMOOTH = 'smooth'
    GENERAL = 'general'


@dataclass(frozen=True)
class BlowupState:
    """
    A dual graph under construction by point blowups.

    @property graph: The current dual graph.
    @property k: Pairs (vertex id, discrepancy); empty in general mode.
    @property mode: SMOOTH when the state grew from the blowup of a smooth point.
    """
    graph: DualGraph
    k: Tuple[Tuple[str, int], ...] = ()
    mode: BlowupMode = BlowupMode.GENERAL

    def discrepancies(self) -> Dict[str, int]:
        return dict(self.k)

    def discrepancy(self, vertex_id: str) -> Optional[int]:
        return self.discrepancies().get(vertex_id)


@dataclass(frozen=True)
class BlowupOperation:
    """
    One line of a blowup script.

    @property kind: 'free' or 'satellite'.
    @property vertices: The vertex for a free blowup, the edge endpoints for a satellite one.
    @property occurrence: Which of several parallel edges to blow up, counted from 0.
    @property line: The script line, when parsed from text.
    """
    kind: str
    vertices: Tuple[str, ...]
    occurrence: int = 0
    line: Optional[int] = None

    @classmethod
    def free(cls, vertex_id: str, line: Optional[int] = None) -> 'BlowupOperation':
        return cls('free', (vertex_id,), 0, line)

    @classmethod
    def satellite(cls, first: str, second: str, occurrence: int = 0,
                  line: Optional[int] = None) -> 'BlowupOperation':
        return cls('satellite', (first, second), occurrence, line)

    def __str__(self):
        if self.kind == 'free':
            return f'free {self.vertices[0]}'
        suffix = f' {self.occurrence}' if self.occurrence else ''
        return f'satellite {self.vertices[0]} {self.vertices[1]}{suffix}'


@dataclass(frozen=True)
class StateRow:
    id: str
    m: int
    q: Fraction
    k: Optional[int]
    mather_log: Fraction
