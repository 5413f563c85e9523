import json

import numpy as np
import pandas as pd
import pytest

from betaproc import __version__
from betaproc.errors import ConfigError
from betaproc.store import CsvResultStore, JsonResultStore, StoreAnswer, make_store, plain


def _frame():
    return pd.DataFrame({"n": [16, 64], "median_distance": [0.1, 1 / 3]})


def test_plain_converts_numpy_values():
    record = plain({"a": np.float64(0.5), "b": np.arange(3), 1: (np.int64(2),)})
    assert record == {"a": 0.5, "b": [0, 1, 2], "1": [2]}
    assert type(record["a"]) is float


def test_store_answer():
    assert StoreAnswer(data=1, error="").ok
    assert not StoreAnswer(data=None, error="boom").ok


def test_make_store(tmp_path):
    assert isinstance(make_store("csv", tmp_path), CsvResultStore)
    assert isinstance(make_store("json", tmp_path, "abc"), JsonResultStore)
    with pytest.raises(ConfigError):
        make_store("parquet", tmp_path)


def test_csv_table_keeps_meta_and_precision(tmp_path):
    store = CsvResultStore(tmp_path / "out", config_hash="abc123")
    answer = store.save_table("curve_demo", _frame(), {"limit_law": "semicircle", "rho": 0.5})
    assert answer.ok
    text = answer.data.read_text()
    assert text.startswith("# config_hash=\"abc123\"\n")
    assert "# tool_version=" in text
    frame, meta = store.load_table(answer.data).data
    assert meta["schema"] == 1 and meta["rho"] == 0.5 and meta["tool_version"] == __version__
    assert frame["median_distance"][1] == 1 / 3
    assert list(frame.columns) == ["n", "median_distance"]


def test_csv_record_flattens_nested_values(tmp_path):
    store = CsvResultStore(tmp_path)
    answer = store.save_record("report", {"metric": "ks", "details": {"p_values": [0.5, 0.25], "t": 1.0}})
    record, _ = store.load_record(answer.data).data
    assert record["metric"] == "ks"
    assert record["details.t"] == 1.0
    assert json.loads(record["details.p_values"]) == [0.5, 0.25]


def test_json_table_and_record(tmp_path):
    store = JsonResultStore(tmp_path, config_hash="abc123")
    path = store.save_table("table", _frame()).data
    document = json.loads(path.read_text())
    assert sorted(document) == ["data", "meta", "schema"]
    frame, meta = store.load_table(path).data
    pd.testing.assert_frame_equal(frame, _frame())
    assert meta["config_hash"] == "abc123"
    record_path = store.save_record("record", {"value": np.float64(0.25)}).data
    assert store.load_record(record_path).data[0] == {"value": 0.25}


@pytest.mark.parametrize("store_class", [CsvResultStore, JsonResultStore])
def test_writes_are_byte_identical(tmp_path, store_class):
    first = store_class(tmp_path / "a", "h").save_table("t", _frame(), {"t": 1.0}).data
    second = store_class(tmp_path / "b", "h").save_table("t", _frame(), {"t": 1.0}).data
    assert first.read_bytes() == second.read_bytes()


def test_load_errors_carry_the_path(tmp_path):
    missing = tmp_path / "missing.csv"
    answer = CsvResultStore(tmp_path).load_table(missing)
    assert not answer.ok and str(missing) in answer.error
    empty = tmp_path / "empty.csv"
    empty.write_text("# schema=1\n")
    assert "no table body" in CsvResultStore(tmp_path).load_table(empty).error
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"data": {}, "schema": 99}))
    assert "unsupported schema" in JsonResultStore(tmp_path).load_record(wrong).error
    record = JsonResultStore(tmp_path).save_record("plain", {"a": 1}).data
    assert "not a table" in JsonResultStore(tmp_path).load_table(record).error


def test_csv_record_needs_one_row(tmp_path):
    store = CsvResultStore(tmp_path)
    path = store.save_table("two_rows", _frame()).data
    assert "expected one record row" in store.load_record(path).error


def test_write_failure_is_reported(tmp_path):
    blocker = tmp_path / "blocked"
    blocker.write_text("file, not a directory")
    answer = CsvResultStore(blocker).save_table("t", _frame())
    assert not answer.ok and answer.data is None
