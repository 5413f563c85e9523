import json
from pathlib import Path

import pandas as pd

from betaproc.store.domain import SCHEMA_VERSION, ResultStore, StoreAnswer, plain


class JsonResultStore(ResultStore):
    """Sorted-key JSON documents of the form {"data": ..., "meta": {...}, "schema": 1}."""

    extension = "json"

    def _write(self, name: str, data, meta: dict) -> StoreAnswer:
        path = self.path_for(name)
        try:
            path = self._prepare(name)
            document = {"data": plain(data), "meta": self.meta(meta), "schema": SCHEMA_VERSION}
            with open(path, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(json.dumps(document, sort_keys=True, indent=2))
                handle.write("\n")
            return StoreAnswer(data=path, error="")
        except (OSError, ValueError, TypeError) as e:
            return StoreAnswer(data=None, error=f"{path}: {e}")

    def save_table(self, name: str, frame: pd.DataFrame, meta: dict = None) -> StoreAnswer:
        """Writes the table column-wise, keeping the column order in `columns`."""
        table = {"columns": list(frame.columns),
                 "values": {str(column): frame[column].tolist() for column in frame.columns}}
        return self._write(name, table, meta)

    def save_record(self, name: str, record: dict, meta: dict = None) -> StoreAnswer:
        return self._write(name, record, meta)

    def _read(self, path) -> StoreAnswer:
        path = Path(path)
        try:
            document = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, ValueError) as e:
            return StoreAnswer(data=None, error=f"{path}: {e}")
        if not isinstance(document, dict) or document.get("schema") != SCHEMA_VERSION:
            return StoreAnswer(data=None, error=f"{path}: unsupported schema, expected {SCHEMA_VERSION}")
        return StoreAnswer(data=(document.get("data"), document.get("meta", {})), error="")

    def load_table(self, path) -> StoreAnswer:
        answer = self._read(path)
        if not answer.ok:
            return answer
        table, meta = answer.data
        if not isinstance(table, dict) or "columns" not in table:
            return StoreAnswer(data=None, error=f"{path}: not a table document")
        frame = pd.DataFrame({column: table["values"][column] for column in table["columns"]})
        return StoreAnswer(data=(frame, meta), error="")

    def load_record(self, path) -> StoreAnswer:
        return self._read(path)
