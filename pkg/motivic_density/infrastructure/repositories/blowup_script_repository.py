import logging
from typing import List
from injector import inject

from motivic_density.core.entities.blowup_state import BlowupOperation
from motivic_density.core.interfaces.graph_storage_interface import GraphStorageInterface
from motivic_density.core.services.blowup_engine import parse_script

"""
Blowup Script Repository module.

This module reads blowup scripts, one operation per line:

    free E1
    satellite E1 E2
    satellite E1 E3 1      # second parallel edge between E1 and E3

@example
```python
repository = BlowupScriptRepository(storage_service)
ops = repository.load_script('graphs/free_e1.script')
```
"""

logger = logging.getLogger(__name__)


class BlowupScriptRepository:
    """
    Repository for blowup scripts.

    @method load_script: Read and parse a script.
    @method save_script: Write operations as a script.
    """

    @inject
    def __init__(self, storage_service: GraphStorageInterface):
        self.storage_service = storage_service

    def load_script(self, name) -> List[BlowupOperation]:
        """
        Read and parse a script.

        @param name: The file name, relative to the storage root or absolute.
        @return: The operations in order.
        @raise ScriptSyntaxError: On a malformed line.
        @raise OSError: When the file cannot be read.
        """
        ops = parse_script(self.storage_service.read_text(name))
        logger.debug('loaded %d blowup operations from %s', len(ops), name)
        return ops

    def save_script(self, name, ops: List[BlowupOperation]):
        self.storage_service.write_text(name, ''.join(f'{op}\n' for op in ops))
