"""命令工具：状态字典、报告与运行清单"""
import json
from pathlib import Path

import pytest

from src.initializers import DEFAULT_INITIALIZERS, InitializerRegistry
from src.tools.replay import _stem_of
from src.tools.screen import screen_correlation
from src.storage import read_dataset


@pytest.fixture
async def commands(config):
    registry = InitializerRegistry()
    registry.auto_register(DEFAULT_INITIALIZERS, config)
    components = await registry.initialize_all(config)
    return components["commands"]


def _report(result):
    with open(result["outputs"]["report"], "r", encoding="utf-8") as f:
        return json.load(f)


async def test_fit_writes_report_and_manifest(commands, csv_file):
    result = await commands["fit"].execute(csv_path=str(csv_file), seed=1)
    assert result["status"] == "success"
    assert result["exit_code"] == 0
    report = _report(result)
    assert report["kkt"]["ok"] is True
    assert report["tuning"]["lambda_source"] == "theoretical"
    assert report["n"] == 50 and report["p"] == 5
    assert set(report["original_scale"]["coefficients"]) == {"a", "b", "c", "d", "e"}
    with open(result["outputs"]["manifest"], "r", encoding="utf-8") as f:
        manifest = json.load(f)
    assert manifest["command"] == "fit"
    assert str(csv_file) in manifest["input_checksums"]
    assert "seconds" in manifest["timing"]


async def test_fit_with_explicit_lambda(commands, csv_file):
    result = await commands["fit"].execute(csv_path=str(csv_file), lam=0.5, output="explicit")
    assert result["stem"] == "explicit"
    assert _report(result)["tuning"]["lambda_source"] == "explicit"


async def test_missing_file_maps_to_input_error(commands, tmp_path):
    result = await commands["fit"].execute(csv_path=str(tmp_path / "absent.csv"))
    assert result["status"] == "error"
    assert result["exit_code"] == 2
    assert result["error_type"] == "MalformedCsv"


async def test_ci_reports_all_methods(commands, csv_file):
    result = await commands["ci"].execute(
        csv_path=str(csv_file), coordinate="a", method="all", B=120, seed=3, output="ci-all"
    )
    assert result["status"] == "success", result
    report = _report(result)
    methods = {row["method"] for row in report["intervals"]}
    assert methods == {"oracle-normal", "percentile-T", "student-R", "student-Rbreve"}
    for row in report["intervals"]:
        assert row["coordinate"] == "a"
        assert row["lower"] <= row["upper"]
    assert report["failed_replicates"] == 0


async def test_ci_is_reproducible(commands, csv_file):
    kwargs = dict(csv_path=str(csv_file), coordinate="0", method="student-R", B=120, seed=9)
    first = await commands["ci"].execute(**kwargs, output="first")
    second = await commands["ci"].execute(**kwargs, output="second")
    assert Path(first["outputs"]["report"]).read_bytes() == Path(second["outputs"]["report"]).read_bytes()


async def test_ci_rejects_unknown_method(commands, csv_file):
    result = await commands["ci"].execute(csv_path=str(csv_file), method="bca", B=120)
    assert result["exit_code"] == 2
    assert result["error_type"] == "UnknownVariant"


async def test_ci_rejects_small_B(commands, csv_file):
    result = await commands["ci"].execute(csv_path=str(csv_file), method="percentile-T", B=20)
    assert result["exit_code"] == 2


async def test_screen_writes_reduced_csv(commands, csv_file, tmp_path):
    out = tmp_path / "screened.csv"
    result = await commands["screen"].execute(csv_path=str(csv_file), threshold=0.3, output_csv=str(out))
    assert result["status"] == "success"
    reduced = read_dataset(out)
    report = _report(result)
    assert list(reduced.names) == report["kept"]
    assert "a" in report["kept"]


def test_screen_correlation_threshold(small_data):
    kept, corr, zero = screen_correlation(small_data, 0.0)
    assert kept == list(range(small_data.p))
    assert zero == []
    kept_all, _, _ = screen_correlation(small_data, 1.0)
    assert kept_all == []


async def test_simulate_preset(commands):
    result = await commands["simulate"].execute(preset="a", mc_reps=2, B=20, seed=5)
    assert result["status"] == "success", result
    assert Path(result["outputs"]["table"]).exists()
    report = _report(result)
    assert report["rows"][0]["reps"] + report["rows"][0]["failures"] == 2
    assert "runtime" not in report["rows"][0]


async def test_simulate_needs_one_source(commands):
    result = await commands["simulate"].execute(preset="a", study="first-coordinate")
    assert result["exit_code"] == 2
    result = await commands["simulate"].execute(preset="zz")
    assert result["error_type"] == "UnknownPreset"


async def test_diagnose_preset(commands):
    result = await commands["diagnose"].execute(preset="a")
    assert result["status"] == "success", result
    assert result["verdicts"]["c5"] == "not-checkable"
    assert _report(result)["mode"] == "simulation"


async def test_diagnose_data(commands, csv_file):
    result = await commands["diagnose"].execute(csv_path=str(csv_file))
    assert result["status"] == "success", result
    assert _report(result)["mode"] == "data"


async def test_edgeworth_preset(commands):
    result = await commands["edgeworth"].execute(preset="a", grid_points=5)
    assert result["status"] == "success", result
    report = _report(result)
    assert len(report["table"]["x"]) == 5
    assert report["spec"]["mode"] == "diagnostic"


async def test_edgeworth_rejects_unknown_mode(commands):
    result = await commands["edgeworth"].execute(preset="a", mode="exact")
    assert result["error_type"] == "UnknownVariant"


async def test_replay_reproduces_report(commands, csv_file):
    original = await commands["fit"].execute(csv_path=str(csv_file), seed=2, output="orig")
    result = await commands["replay"].execute(manifest_path=original["outputs"]["manifest"])
    assert result["status"] == "success", result
    assert result["identical"] is True
    assert result["stem"] == "orig.replay"
    assert result["changed_inputs"] == []


async def test_replay_missing_manifest(commands, tmp_path):
    result = await commands["replay"].execute(manifest_path=str(tmp_path / "none.manifest.json"))
    assert result["exit_code"] == 2


def test_stem_of_manifest_path():
    assert _stem_of("reports/fit-y-seed0.manifest.json") == "fit-y-seed0"


async def test_ci_without_selected_variables_falls_back_to_percentile(commands, csv_file):
    result = await commands["ci"].execute(
        csv_path=str(csv_file), coordinate="a", method="all", lam=1.0e6, B=120, seed=4
    )
    assert result["status"] == "success", result
    assert len(result["warnings"]) == 2
    report = _report(result)
    assert report["fit"]["active_set"] == []
    used = {row["requested_method"]: row["method"] for row in report["intervals"]}
    assert used == {
        "oracle-normal": "percentile-T",
        "percentile-T": "percentile-T",
        "student-R": "student-R",
        "student-Rbreve": "percentile-T",
    }


async def test_tuning_override_keeps_study_split(commands, caplog):
    tool = commands["simulate"]
    rows = dict(tool._rows({"study": "tuning-a", "tuning": "cv", "mc_reps": 2, "B": 20}))
    assert rows["theoretical"].tuning == "theoretical"
    assert rows["cv"].tuning == "cv"
    assert rows["theoretical-0.25"].tuning == "theoretical"
    assert all(sc.B == 20 and sc.mc_reps == 2 for sc in rows.values())
    assert "tuning" in caplog.text

    plain = tool._rows({"study": "first-coordinate", "tuning": "cv", "mc_reps": 2})
    assert [sc.tuning for _, sc in plain] == ["cv"] * 4
