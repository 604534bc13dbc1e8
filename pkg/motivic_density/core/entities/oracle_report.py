from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple

from motivic_density.core.entities.motivic_class import LaurentTruncation, MotivicClass

"""
Oracle report entity module.

This module defines the strata of a sphere preimage and the reports produced by the
brute-force oracle: the per-residue limits of the normalized volumes, their mean value
and the comparison with the closed formula.

@example
```python
report = oracle.cross_check(graph, precision=12)
report.match                 # True
report.oracle.period         # 60 for the E8 graph
```
"""


class StratumKind(Enum):
    VERTEX = 'vertex'
    EDGE = 'edge'


@dataclass(frozen=True)
class StratumTerm:
    """
    One chart of the sphere preimage.

    @property kind: VERTEX for a punctured component, EDGE for a double point.
    @property vertices: The vertex id, or the two endpoint ids.
    @property multiplicities: m, or (m_v, m_w).
    @property exponents: a = m (q + 1), or (a_v, a_w); positive integers.
    """
    kind: StratumKind
    vertices: Tuple[str, ...]
    multiplicities: Tuple[int, ...]
    exponents: Tuple[int, ...]


@dataclass(frozen=True)
class ResidueLimit:
    """
    The stabilized limit along n = c mod e.

    @property residue: The residue c.
    @property limit: The truncation the sequence settled on.
    @property stabilized_at: The first n of the window of identical truncations.
    @property window: The window length held.
    @property evaluations: The number of n evaluated.
    """
    residue: int
    limit: LaurentTruncation
    stabilized_at: int
    window: int
    evaluations: int


@dataclass(frozen=True)
class ThetaLimitReport:
    """
    Per-residue limits and their mean value.

    @property period: The modulus e the residues are taken over.
    @property precision: The truncation depth D.
    @property window: The stabilization window W.
    @property n_max: The largest n allowed.
    @property limits: One entry per residue, ascending.
    @property mean: (1/e) times the sum of the limits.
    """
    period: int
    precision: int
    window: int
    n_max: int
    limits: Tuple[ResidueLimit, ...]
    mean: LaurentTruncation

    def limit(self, residue: int) -> LaurentTruncation:
        return self.limits[residue].limit


@dataclass(frozen=True)
class CheckReport:
    """
    Closed formula against oracle.

    @property density: The closed-form surface density.
    @property formula: Its truncation at the oracle precision.
    @property oracle: The oracle's limit report.
    @property match: True when every stored coefficient agrees.
    @property timings: Seconds spent per phase.
    @property slowest_decay: The slowest decay rate of the transient terms, or None.
    """
    density: MotivicClass
    formula: LaurentTruncation
    oracle: ThetaLimitReport
    match: bool
    timings: Dict[str, float] = field(default_factory=dict, compare=False)
    slowest_decay: Optional[Fraction] = None
