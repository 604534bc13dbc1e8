import logging
import time
from dataclasses import dataclass

from motivic_density.core.entities.dual_graph import DualGraph, ValidationReport
from motivic_density.core.entities.motivic_class import MotivicClass
from motivic_density.core.services import graph_service
from motivic_density.core.services.density_formula import surface_density

"""
Compute Density Use Case module.

This module defines the use case for evaluating the closed-form surface density of a
dual graph, optionally substituting L + 1 for the symbols of genus-0 curves.

@example
```python
from motivic_density.core.use_cases.compute_density_use_case import ComputeDensityUseCase

result = ComputeDensityUseCase().execute(graph, rationalize=True)
canonical_string(result.density)   # '1/2' for the E8 graph
```
"""

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DensityResult:
    """
    @property density: The surface density.
    @property report: The validation report of the graph (its warnings are kept).
    @property rationalized: Whether genus-0 symbols were substituted.
    """
    density: MotivicClass
    report: ValidationReport
    rationalized: bool = False


class ComputeDensityUseCase:
    """
    Use case for evaluating the surface density formula.

    @method execute: Evaluate the formula on a graph.
    """

    def execute(self, graph: DualGraph, rationalize: bool = False) -> DensityResult:
        """
        Evaluate the surface density.

        @param graph: The dual graph.
        @param rationalize: Substitute L + 1 for genus-0 curve symbols.
        @return: The density with the validation report.
        @raise NonAdmissibleAdjacency: When two rate-one vertices are adjacent.
        @raise InadmissibleGraph: On any other validation violation.
        """
        started = time.perf_counter()
        density = surface_density(graph)
        if rationalize:
            density = graph_service.rationalize(graph, density)
        report = graph_service.validate(graph)
        for warning in report.warnings:
            logger.warning('%s: %s', warning.kind.value, warning.message)
        logger.info('density of a %d-vertex graph in %.3fs', len(graph.vertices), time.perf_counter() - started)
        return DensityResult(density, report, rationalize)
