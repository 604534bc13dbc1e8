import logging
from typing import Optional
from injector import inject

from motivic_density.core.app_config import AppConfig
from motivic_density.core.entities.dual_graph import DualGraph
from motivic_density.core.entities.oracle_report import CheckReport
from motivic_density.core.services import graph_service, oracle

"""
Cross Check Use Case module.

This module defines the use case comparing the closed formula with the brute-force
oracle. Budgets default to the DENSITY_* settings; n_max is given as a multiple of the
graph period.

@example
```python
from motivic_density.core.use_cases.cross_check_use_case import CrossCheckUseCase

check_use_case = CrossCheckUseCase(config)
report = check_use_case.execute(graph, precision=12)
report.match
```
"""

logger = logging.getLogger(__name__)


class CrossCheckUseCase:
    """
    Use case for checking the surface formula against the oracle.

    @method execute: Run the cross-check on one graph.
    """

    @inject
    def __init__(self, config: AppConfig):
        """
        Initialize the use case with its dependencies.

        @param config: The application configuration holding the default budgets.
        """
        self.precision = config.get('DENSITY_PRECISION', oracle.DEFAULT_PRECISION)
        self.window = config.get('DENSITY_WINDOW', oracle.DEFAULT_WINDOW)
        self.multiplier = config.get('DENSITY_NMAX_MULTIPLIER', oracle.DEFAULT_NMAX_MULTIPLIER)

    def execute(self, graph: DualGraph, precision: Optional[int] = None, window: Optional[int] = None,
                multiplier: Optional[int] = None, modulus: Optional[int] = None) -> CheckReport:
        """
        Run the cross-check.

        @param graph: An admissible graph.
        @param precision: Truncation depth D.
        @param window: Stabilization window W.
        @param multiplier: n_max = multiplier * modulus.
        @param modulus: Residue modulus; defaults to the graph period.
        @return: The check report.
        @raise NoStabilization: When the budget is too small for the graph.
        """
        precision = self.precision if precision is None else precision
        window = self.window if window is None else window
        multiplier = self.multiplier if multiplier is None else multiplier
        if multiplier < 1:
            raise ValueError(f'n_max multiplier must be >= 1, got {multiplier}')
        modulus = graph_service.period(graph) if modulus is None else modulus
        report = oracle.cross_check(graph, precision, window, multiplier * modulus, modulus)
        logger.info('cross-check on %d vertices, period %d: %s in %.3fs',
                    len(graph.vertices), modulus, 'match' if report.match else 'MISMATCH',
                    report.timings['total'])
        return report
