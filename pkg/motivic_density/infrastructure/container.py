from injector import singleton

from motivic_density.core.use_cases.load_graph_use_case import LoadGraphUseCase
from motivic_density.core.use_cases.validate_graph_use_case import ValidateGraphUseCase
from motivic_density.core.use_cases.compute_density_use_case import ComputeDensityUseCase
from motivic_density.core.use_cases.curve_density_use_case import CurveDensityUseCase
from motivic_density.core.use_cases.cross_check_use_case import CrossCheckUseCase
from motivic_density.core.use_cases.blowup_use_case import BlowupUseCase
from motivic_density.core.use_cases.self_check_use_case import SelfCheckUseCase
from motivic_density.core.interfaces.graph_storage_interface import GraphStorageInterface

from motivic_density.infrastructure.repositories.graph_repository import GraphRepository
from motivic_density.infrastructure.repositories.blowup_script_repository import BlowupScriptRepository
from motivic_density.infrastructure.services.local_graph_storage_service import LocalGraphStorageService
from motivic_density.core.app_config import AppConfig

"""
Dependency injection container configuration module.

This module configures the dependency injection container shared by the HTTP service
and the command-line tool. It binds interfaces to their implementations and configures
services with their dependencies.

@example
```python
from injector import Injector
from motivic_density.infrastructure.container import configure_container

injector = Injector([lambda binder: configure_container(binder, config)])
```
"""


def configure_container(binder, config):
    """
    Configure the dependency injection container.

    @param binder: The binder instance from the Injector.
    @param config: The application configuration (a mapping of settings).
    """
    # Bind configuration
    binder.bind(AppConfig, to=AppConfig(config), scope=singleton)

    # Bind storage
    binder.bind(LocalGraphStorageService, to=LocalGraphStorageService, scope=singleton)
    binder.bind(GraphStorageInterface, to=LocalGraphStorageService, scope=singleton)

    # Bind repositories
    binder.bind(GraphRepository, to=GraphRepository, scope=singleton)
    binder.bind(BlowupScriptRepository, to=BlowupScriptRepository, scope=singleton)

    # Bind use cases
    binder.bind(LoadGraphUseCase, to=LoadGraphUseCase, scope=singleton)
    binder.bind(ValidateGraphUseCase, to=ValidateGraphUseCase, scope=singleton)
    binder.bind(ComputeDensityUseCase, to=ComputeDensityUseCase, scope=singleton)
    binder.bind(CurveDensityUseCase, to=CurveDensityUseCase, scope=singleton)
    binder.bind(CrossCheckUseCase, to=CrossCheckUseCase, scope=singleton)
    binder.bind(BlowupUseCase, to=BlowupUseCase, scope=singleton)
    binder.bind(SelfCheckUseCase, to=SelfCheckUseCase, scope=singleton)
