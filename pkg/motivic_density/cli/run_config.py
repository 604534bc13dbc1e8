from enum import Enum

from pydantic import BaseModel, Extra, conint

from motivic_density.core.app_config import AppConfig

"""
Run configuration module.

The settings of one command-line run. Defaults come from the application
configuration; command-line flags override them. Every machine report embeds the
configuration it was produced with.

@example
```python
run_config = RunConfig.from_app_config(app_config, precision=8)
run_config.payload()   # {'precision': 8, 'window': 3, ...}
```
"""


class OutputMode(str, Enum):
    HUMAN = 'human'
    MACHINE = 'machine'


class RunConfig(BaseModel):
    """
    Run configuration.

    @property precision: Truncation depth D (>= 0).
    @property window: Stabilization window W (>= 2).
    @property nmax_multiplier: n_max as a multiple of the period (>= 1).
    @property output: Human or machine output.
    @property seed: Seed of the random commands, in [0, 2^64).
    """
    precision: conint(ge=0) = 12
    window: conint(ge=2) = 3
    nmax_multiplier: conint(ge=1) = 60
    output: OutputMode = OutputMode.HUMAN
    seed: conint(ge=0, lt=2 ** 64) = 0

    class Config:
        allow_mutation = False
        extra = Extra.forbid

    @classmethod
    def from_app_config(cls, config: AppConfig, **overrides) -> 'RunConfig':
        """
        Build a run configuration from settings and flag values.

        @param config: The application configuration.
        @param overrides: Flag values; None means the flag was not given.
        @raise pydantic.ValidationError: When a value is out of range.
        """
        values = {
            'precision': config.get('DENSITY_PRECISION', 12),
            'window': config.get('DENSITY_WINDOW', 3),
            'nmax_multiplier': config.get('DENSITY_NMAX_MULTIPLIER', 60),
            'output': config.get('DENSITY_OUTPUT', OutputMode.HUMAN.value),
            'seed': config.get('DENSITY_SEED', 0),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    @property
    def machine(self) -> bool:
        return self.output is OutputMode.MACHINE

    def payload(self) -> dict:
        values = self.dict()
        values['output'] = self.output.value
        return values
