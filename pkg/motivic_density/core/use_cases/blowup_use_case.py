import logging
from dataclasses import dataclass
from typing import List, Tuple
from injector import inject

from motivic_density.core.entities.blowup_state import BlowupOperation, BlowupState
from motivic_density.core.services import blowup_engine
from motivic_density.infrastructure.repositories.blowup_script_repository import BlowupScriptRepository

"""
Blowup Use Case module.

This module defines the use case running a blowup sequence from the first blowup of a
smooth point, either read from a script or drawn at random, and checking the smooth
discrepancy identity after every step.

@example
```python
outcome = blowup_use_case.execute_script('graphs/free_e1.script')
outcome.identity_holds   # True
```
"""

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlowupOutcome:
    """
    @property operations: The operations applied.
    @property state: The final state.
    @property identity_holds: Whether q = (k + 1)/m - 1 held after every step.
    """
    operations: Tuple[BlowupOperation, ...]
    state: BlowupState
    identity_holds: bool


class BlowupUseCase:
    """
    Use case for blowup sequences.

    @method execute: Apply operations from init_smooth.
    @method execute_script: Apply the operations of a script file.
    @method execute_random: Apply a seeded random sequence.
    """

    @inject
    def __init__(self, script_repository: BlowupScriptRepository):
        """
        Initialize the use case with its dependencies.

        @param script_repository: The repository for blowup scripts.
        """
        self.script_repository = script_repository

    def execute(self, ops: List[BlowupOperation]) -> BlowupOutcome:
        """
        @raise UnknownVertex: When an operation names a missing vertex.
        @raise UnknownEdge: When a satellite operation names a missing edge.
        """
        state = blowup_engine.init_smooth()
        holds = blowup_engine.check_smooth_identity(state)
        for state in blowup_engine.iterate_script(state, ops):
            holds = holds and blowup_engine.check_smooth_identity(state)
        logger.info('applied %d blowups, %d vertices, identity %s',
                    len(ops), len(state.graph.vertices), 'holds' if holds else 'FAILS')
        return BlowupOutcome(tuple(ops), state, holds)

    def execute_script(self, name) -> BlowupOutcome:
        return self.execute(self.script_repository.load_script(name))

    def execute_random(self, steps: int, seed: int) -> BlowupOutcome:
        if steps < 0:
            raise ValueError(f'steps must be >= 0, got {steps}')
        return self.execute(blowup_engine.random_operations(steps, seed))
