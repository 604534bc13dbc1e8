import logging
import time

from motivic_density.core.entities.dual_graph import DualGraph, ValidationReport
from motivic_density.core.services import graph_service

"""
Validate Graph Use Case module.

@example
```python
report = ValidateGraphUseCase().execute(graph)
report.ok
```
"""

logger = logging.getLogger(__name__)


class ValidateGraphUseCase:
    """
    Use case for checking a dual graph against the admissibility rules.

    @method execute: Validate a graph.
    """

    def execute(self, graph: DualGraph) -> ValidationReport:
        started = time.perf_counter()
        report = graph_service.validate(graph)
        for warning in report.warnings:
            logger.warning('%s: %s', warning.kind.value, warning.message)
        logger.info('validated %d vertices: %d violations, %d warnings in %.3fs',
                    len(graph.vertices), len(report.violations), len(report.warnings),
                    time.perf_counter() - started)
        return report
