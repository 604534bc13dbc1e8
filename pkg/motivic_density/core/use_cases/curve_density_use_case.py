import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from motivic_density.core.entities.curve_branch import CurveBranchData
from motivic_density.core.services import oracle
from motivic_density.core.services.density_formula import curve_density

"""
Curve Density Use Case module.

@example
```python
result = CurveDensityUseCase().execute([2, 3], with_oracle=True)
result.density, result.oracle, result.match   # 5/6, 5/6, True
```
"""

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurveResult:
    branches: CurveBranchData
    density: Fraction
    oracle: Optional[Fraction] = None

    @property
    def match(self) -> Optional[bool]:
        return None if self.oracle is None else self.oracle == self.density


class CurveDensityUseCase:
    """
    Use case for the density of a plane curve germ from its branch multiplicities.

    @method execute: Evaluate the formula, optionally against the oracle.
    """

    def execute(self, mults: Iterable[int], with_oracle: bool = False) -> CurveResult:
        """
        @param mults: The branch multiplicities N_i.
        @param with_oracle: Also compute the mean value of the normalized volumes.
        @return: The result.
        @raise ValueError: When a multiplicity is not a positive integer.
        """
        branches = CurveBranchData.of(mults)
        density = curve_density(branches)
        mean = oracle.mean_value_curve(branches) if with_oracle else None
        logger.info('curve density of %s: %s', list(branches.mults), density)
        return CurveResult(branches, density, mean)
