from dataclasses import dataclass
from typing import Iterable, Tuple

"""
Curve branch entity module.

@example
```python
from motivic_density.core.entities.curve_branch import CurveBranchData

branches = CurveBranchData.of([2, 3])
```
"""


@dataclass(frozen=True)
class CurveBranchData:
    """
    The multiplicities N_1..N_r of the branches of a plane curve germ.

    @property mults: The multiplicities, each >= 1; at least one.
    """
    mults: Tuple[int, ...]

    def __post_init__(self):
        if not self.mults:
            raise ValueError('a curve needs at least one branch')
        for n in self.mults:
            if isinstance(n, bool) or not isinstance(n, int) or n < 1:
                raise ValueError(f'branch multiplicity must be a positive integer, got {n!r}')

    @classmethod
    def of(cls, mults: Iterable[int]) -> 'CurveBranchData':
        return cls(tuple(mults))
