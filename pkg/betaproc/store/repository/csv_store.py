import io
import json
from pathlib import Path

import pandas as pd

from betaproc.store.domain import ResultStore, StoreAnswer, plain

FLOAT_FORMAT = "%.17g"


def _meta_lines(meta: dict) -> str:
    return "".join(f"# {key}={json.dumps(meta[key])}\n" for key in sorted(meta))


def _split_meta(text: str) -> tuple:
    meta, body = {}, []
    for line in text.splitlines(keepends=True):
        if line.startswith("# ") and "=" in line and not body:
            key, value = line[2:].rstrip("\n").split("=", 1)
            meta[key] = json.loads(value)
        else:
            body.append(line)
    return meta, "".join(body)


class CsvResultStore(ResultStore):
    """
    Tables as CSV preceded by `# key=value` metadata lines.

    Values in the metadata lines are JSON encoded; floats in the body are
    written with 17 significant digits.
    """

    extension = "csv"

    def save_table(self, name: str, frame: pd.DataFrame, meta: dict = None) -> StoreAnswer:
        path = self.path_for(name)
        try:
            path = self._prepare(name)
            body = frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
            with open(path, "w", encoding="utf-8", newline="") as handle:
                handle.write(_meta_lines(self.meta(meta)))
                handle.write(body)
            return StoreAnswer(data=path, error="")
        except (OSError, ValueError, TypeError) as e:
            return StoreAnswer(data=None, error=f"{path}: {e}")

    def save_record(self, name: str, record: dict, meta: dict = None) -> StoreAnswer:
        """Writes the record flattened to one row; nested lists become JSON strings."""
        flat = pd.json_normalize(plain(record), sep=".")
        for column in flat.columns:
            if flat[column].map(lambda value: isinstance(value, (list, dict))).any():
                flat[column] = flat[column].map(json.dumps)
        return self.save_table(name, flat, meta)

    def load_table(self, path) -> StoreAnswer:
        path = Path(path)
        try:
            meta, body = _split_meta(path.read_text(encoding="utf-8"))
            if not body.strip():
                return StoreAnswer(data=None, error=f"{path}: no table body")
            return StoreAnswer(data=(pd.read_csv(io.StringIO(body)), meta), error="")
        except (OSError, ValueError, pd.errors.ParserError) as e:
            return StoreAnswer(data=None, error=f"{path}: {e}")

    def load_record(self, path) -> StoreAnswer:
        answer = self.load_table(path)
        if not answer.ok:
            return answer
        frame, meta = answer.data
        if len(frame) != 1:
            return StoreAnswer(data=None, error=f"{path}: expected one record row, found {len(frame)}")
        return StoreAnswer(data=(frame.iloc[0].to_dict(), meta), error="")
