import os
from injector import inject

from motivic_density.core.interfaces.graph_storage_interface import GraphStorageInterface
from motivic_density.core.app_config import AppConfig

"""
Local Graph Storage Service module.

This module defines the storage for graph files and blowup scripts on the local file
system. Relative names are resolved against the GRAPH_DIR setting; absolute names are
used as given.

@example
```python
from motivic_density.infrastructure.services.local_graph_storage_service import LocalGraphStorageService

storage = LocalGraphStorageService(AppConfig({'GRAPH_DIR': 'graphs'}))
text = storage.read_text('e8.graph')
```
"""


class LocalGraphStorageService(GraphStorageInterface):
    """
    Storage for graph files in a local directory.

    @method read_text: Read a file as text.
    @method write_text: Write text to a file.
    @method exists: Check if a file exists.
    @method list_names: List files under the base directory.
    @method resolve: Resolve a name to a path.
    """

    @inject
    def __init__(self, config: AppConfig):
        """
        Initialize the service with its dependencies.

        @param config: The application configuration.
        """
        self.base_dir = config.get('GRAPH_DIR', '.')

    def resolve(self, name):
        """
        Resolve a name to a filesystem path.

        @param name: The file name.
        @return: The absolute path.
        """
        if os.path.isabs(name):
            return name
        return os.path.abspath(os.path.join(self.base_dir, name))

    def read_text(self, name):
        """
        Read a file as UTF-8 text.

        @param name: The file name.
        @return: The content of the file.
        """
        with open(self.resolve(name), 'r', encoding='utf-8') as f:
            return f.read()

    def write_text(self, name, content):
        """
        Write UTF-8 text to a file.

        @param name: The file name.
        @param content: The text content to write.
        """
        target_path = self.resolve(name)
        os.makedirs(os.path.dirname(target_path), exist_ok=True)
        with open(target_path, 'w', encoding='utf-8') as f:
            f.write(content)

    def exists(self, name):
        return os.path.isfile(self.resolve(name))

    def list_names(self, suffix=''):
        """
        List files under the base directory.

        @param suffix: The suffix to filter file names by.
        @return: A list of names relative to the base directory.
        """
        result = []
        if not os.path.isdir(self.base_dir):
            return result
        for root, _, files in os.walk(self.base_dir):
            for file in files:
                if file.endswith(suffix):
                    full_path = os.path.join(root, file)
                    result.append(os.path.relpath(full_path, self.base_dir))
        return result
