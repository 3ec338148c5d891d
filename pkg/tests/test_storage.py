"""CSV 读写、报告存储与运行清单"""
import json

import numpy as np
import pytest

from src.errors import InputError, MalformedCsv, NonNumericCell, UnknownVariant
from src.storage import RunManifest, StorageFactory, dumps_report, read_dataset, sha256_file, to_jsonable, write_dataset
from src.storage.fixtures import PROSTATE_COLUMNS, microarray_like, prostate_like


def test_csv_round_trip_is_exact(tmp_path, small_data):
    path = write_dataset(small_data, tmp_path / "data.csv")
    back = read_dataset(path)
    np.testing.assert_array_equal(back.X, small_data.X)
    np.testing.assert_array_equal(back.y, small_data.y)
    assert back.names == small_data.names


def test_non_numeric_cell_reports_row_and_column(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b,y\n1,2,3\n4,oops,6\n", encoding="utf-8")
    with pytest.raises(NonNumericCell) as excinfo:
        read_dataset(path)
    assert excinfo.value.row == 3
    assert excinfo.value.column == "b"


def test_missing_cell_is_malformed(tmp_path):
    path = tmp_path / "missing.csv"
    path.write_text("a,b,y\n1,,3\n", encoding="utf-8")
    with pytest.raises(MalformedCsv) as excinfo:
        read_dataset(path)
    assert excinfo.value.row == 2
    assert not isinstance(excinfo.value, NonNumericCell)


def test_duplicate_header_and_missing_response(tmp_path):
    dup = tmp_path / "dup.csv"
    dup.write_text("a,a,y\n1,2,3\n", encoding="utf-8")
    with pytest.raises(MalformedCsv):
        read_dataset(dup)
    plain = tmp_path / "plain.csv"
    plain.write_text("a,b\n1,2\n3,4\n", encoding="utf-8")
    with pytest.raises(MalformedCsv):
        read_dataset(plain, response="y")


def test_non_finite_cell_is_rejected(tmp_path):
    path = tmp_path / "inf.csv"
    path.write_text("a,y\n1,2\ninf,3\n", encoding="utf-8")
    with pytest.raises(NonNumericCell):
        read_dataset(path)


def test_to_jsonable_maps_special_floats():
    payload = to_jsonable({"a": np.float64(np.inf), "b": float("-inf"), "c": np.nan, "d": np.arange(2)})
    assert payload == {"a": "inf", "b": "-inf", "c": None, "d": [0, 1]}


def test_dumps_report_is_stable():
    text = dumps_report({"b": 1.0, "a": [0.1, 2]})
    assert text == dumps_report({"a": [0.1, 2], "b": 1.0})
    assert text.endswith("\n")
    assert json.loads(text)["a"][0] == 0.1


async def test_json_store_round_trip(store):
    path = await store.save_report("demo", {"x": 1.5, "label": "区间"})
    assert path.name == "demo.json"
    assert await store.load_report("demo") == {"x": 1.5, "label": "区间"}
    manifest = RunManifest(command="fit", arguments={"seed": 1})
    await store.save_manifest("demo", manifest)
    assert (await store.load_manifest("demo")).command == "fit"
    assert await store.list_reports() == ["demo"]


def test_manifest_detects_changed_inputs(tmp_path):
    data = tmp_path / "in.csv"
    data.write_text("a,y\n1,2\n3,4\n", encoding="utf-8")
    manifest = RunManifest(command="fit", arguments={}, input_checksums={str(data): sha256_file(data)})
    assert manifest.verify_inputs() == {}
    data.write_text("a,y\n1,2\n3,5\n", encoding="utf-8")
    assert str(data) in manifest.verify_inputs()
    with pytest.raises(InputError):
        RunManifest.from_dict({"command": "fit"})


def test_storage_factory():
    with pytest.raises(UnknownVariant):
        StorageFactory.create({"backend": "sqlite"})


def test_fixture_shapes():
    prostate = prostate_like()
    assert (prostate.n, prostate.p) == (97, 8)
    assert prostate.names == PROSTATE_COLUMNS
    micro = microarray_like(genes=300, correlated=100)
    assert (micro.n, micro.p) == (30, 300)
