from abc import ABC, abstractmethod

"""
Graph Storage Interface module.

This module defines the abstract interface for the storage holding graph files and
blowup scripts.

@example
```python
from motivic_density.core.interfaces.graph_storage_interface import GraphStorageInterface

class MemoryStorage(GraphStorageInterface):
    def read_text(self, name):
        return self.files[name]
    ...
```
"""


class GraphStorageInterface(ABC):
    """
    Abstract interface for graph storage.

    Names are relative to the storage root unless absolute.
    """

    @abstractmethod
    def read_text(self, name):
        """
        Read a file as UTF-8 text.

        @param name: The file name.
        @return: The content.
        @raise OSError: When the file cannot be read.
        """
        pass

    @abstractmethod
    def write_text(self, name, content):
        """
        Write UTF-8 text to a file, creating parent directories.

        @param name: The file name.
        @param content: The text to write.
        """
        pass

    @abstractmethod
    def exists(self, name):
        """
        Check if a file exists.

        @param name: The file name.
        @return: True if the file exists, False otherwise.
        """
        pass

    @abstractmethod
    def list_names(self, suffix=''):
        """
        List the files under the storage root.

        @param suffix: Only names ending with this suffix are returned.
        @return: A list of names relative to the root.
        """
        pass

    @abstractmethod
    def resolve(self, name):
        """
        Return the filesystem path a name refers to.

        @param name: The file name.
        @return: The absolute path.
        """
        pass
