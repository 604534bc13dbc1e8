import logging
from injector import inject

from motivic_density.core.entities.dual_graph import DualGraph
from motivic_density.infrastructure.repositories.graph_repository import GraphRepository, graph_from_payload

"""
Load Graph Use Case module.

This module defines the use case for reading a dual graph, either from a graph file
through the repository or from an already decoded request body.

@example
```python
from motivic_density.core.use_cases.load_graph_use_case import LoadGraphUseCase

load_use_case = LoadGraphUseCase(graph_repository)
graph = load_use_case.execute('graphs/e8.graph')
```
"""

logger = logging.getLogger(__name__)


class LoadGraphUseCase:
    """
    Use case for reading dual graphs.

    @method execute: Load a graph file by name.
    @method from_payload: Build a graph from a decoded JSON object.
    """

    @inject
    def __init__(self, graph_repository: GraphRepository):
        """
        Initialize the use case with its dependencies.

        @param graph_repository: The repository for graph files.
        """
        self.graph_repository = graph_repository

    def execute(self, name) -> DualGraph:
        """
        Load a graph file.

        @param name: The file name, relative to GRAPH_DIR or absolute.
        @return: The parsed graph.
        """
        graph = self.graph_repository.load_graph(name)
        logger.info('loaded graph %s (%d vertices, %d edges)', name, len(graph.vertices), len(graph.edges))
        return graph

    def from_payload(self, payload) -> DualGraph:
        return graph_from_payload(payload)
