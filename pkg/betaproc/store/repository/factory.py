from betaproc.errors import ConfigError
from betaproc.store.domain import ResultStore
from .csv_store import CsvResultStore
from .json_store import JsonResultStore

STORES = {"csv": CsvResultStore, "json": JsonResultStore}


def make_store(output_format: str, root, config_hash: str = "") -> ResultStore:
    """Returns the store writing `output_format` ('csv' or 'json') files under `root`."""
    if output_format not in STORES:
        raise ConfigError(f"output_format: expected one of {tuple(STORES)}, got '{output_format}'")
    return STORES[output_format](root, config_hash)
