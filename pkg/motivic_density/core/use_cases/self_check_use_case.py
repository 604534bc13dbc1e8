import logging
import random
from dataclasses import dataclass
from typing import Optional, Tuple
from injector import inject

from motivic_density.core.entities.dual_graph import DualGraph
from motivic_density.core.entities.oracle_report import CheckReport
from motivic_density.core.services.graph_sampler import random_admissible_graph
from motivic_density.core.use_cases.cross_check_use_case import CrossCheckUseCase

"""
Self Check Use Case module.

Runs the formula/oracle cross-check on a seeded stream of random admissible graphs.

@example
```python
result = self_check_use_case.execute(count=100, seed=0)
result.all_match
```
"""

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelfCheckResult:
    seed: int
    checks: Tuple[Tuple[DualGraph, CheckReport], ...]

    @property
    def all_match(self) -> bool:
        return all(report.match for _, report in self.checks)

    @property
    def mismatches(self) -> Tuple[DualGraph, ...]:
        return tuple(graph for graph, report in self.checks if not report.match)


class SelfCheckUseCase:
    """
    Use case for the randomized cross-check sweep.

    @method execute: Check count random graphs drawn from seed.
    """

    @inject
    def __init__(self, cross_check_use_case: CrossCheckUseCase):
        self.cross_check_use_case = cross_check_use_case

    def execute(self, count: int, seed: int, precision: Optional[int] = None,
                window: Optional[int] = None, multiplier: Optional[int] = None) -> SelfCheckResult:
        """
        @param count: Number of graphs.
        @param seed: Seed of the graph stream.
        @return: Every graph with its report.
        @raise NoStabilization: When some graph exceeds the budget.
        """
        rng = random.Random(seed)
        checks = []
        for index in range(count):
            graph = random_admissible_graph(rng, extra_edges=rng.randint(0, 1))
            report = self.cross_check_use_case.execute(graph, precision, window, multiplier)
            if not report.match:
                logger.warning('graph %d of seed %d: formula and oracle disagree', index, seed)
            checks.append((graph, report))
        return SelfCheckResult(seed, tuple(checks))
