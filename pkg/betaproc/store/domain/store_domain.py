from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from betaproc import __version__

SCHEMA_VERSION = 1


@dataclass
class StoreAnswer:
    """
    The result of a store operation.

    Attributes:
    ----------
    data : Any
        The written path, or the loaded (content, meta) pair.
    error : str
        Error message with path context; empty on success.
    """
    data: Any
    error: str

    @property
    def ok(self) -> bool:
        return not self.error


def plain(value):
    """Converts numpy scalars and arrays inside a record to JSON-ready Python values."""
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return plain(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    return value


class ResultStore(ABC):
    """
    An abstract base class for result files under one output directory.

    Every file embeds the config hash, the tool version and the schema
    version, and nothing time dependent, so equal inputs give equal bytes.

    Attributes:
    ----------
    root : Path
        Output directory, created on first write.
    config_hash : str
        Hash of the experiment configuration.
    """

    extension = ""

    def __init__(self, root, config_hash: str = ""):
        self.root = Path(root)
        self.config_hash = config_hash

    def meta(self, extra: dict = None) -> dict:
        record = {"config_hash": self.config_hash, "schema": SCHEMA_VERSION, "tool_version": __version__}
        record.update(plain(extra or {}))
        return record

    def path_for(self, name: str) -> Path:
        return self.root / f"{name}.{self.extension}"

    def _prepare(self, name: str) -> Path:
        path = self.path_for(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    @abstractmethod
    def save_table(self, name: str, frame: pd.DataFrame, meta: dict = None) -> StoreAnswer:
        """
        Writes a table. Must be implemented by subclasses.

        Parameters:
        ----------
        name : str
            File stem relative to the root.
        frame : pd.DataFrame
            The table.
        meta : dict, optional
            Extra metadata written next to the standard fields.

        Returns:
        -------
        StoreAnswer:
            The written path, or the error.
        """
        raise NotImplementedError

    @abstractmethod
    def save_record(self, name: str, record: dict, meta: dict = None) -> StoreAnswer:
        """Writes a nested record. Must be implemented by subclasses."""
        raise NotImplementedError

    @abstractmethod
    def load_table(self, path) -> StoreAnswer:
        """Reads a table back as (frame, meta). Must be implemented by subclasses."""
        raise NotImplementedError

    @abstractmethod
    def load_record(self, path) -> StoreAnswer:
        """Reads a record back as (record, meta). Must be implemented by subclasses."""
        raise NotImplementedError
