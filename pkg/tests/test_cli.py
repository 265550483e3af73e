import json

import pytest

from spintunnel import cli, io


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_compare_mn12(capsys):
    code, out, _ = run(["compare", "--preset", "mn12", "--D", "0.6", "--S", "10", "--h", "0"], capsys)
    assert code == 0
    _, rows, comments = io.read_csv(out)
    summary = dict(c.split("=", 1) for c in comments)
    assert float(summary["ground_exact"]) == -60.0
    assert float(summary["ground_angle"]) == pytest.approx(-60.2786077, abs=1e-6)
    assert float(summary["rel_error_percent"]) == pytest.approx(0.4643, abs=1e-4)


def test_output_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert cli.main(["angle", "--preset", "lipkin", "--chi", "1.5", "--Ns", "20", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_raw_mode_matches_preset(capsys):
    _, raw, _ = run(["exact", "--A", "0", "--B", "-0.275", "--G", "0.023", "--j", "10", "--unit", "kelvin"], capsys)
    _, pre, _ = run(["exact", "--preset", "fe8"], capsys)
    assert raw == pre


def test_json_format(capsys):
    code, out, _ = run(["solve", "--preset", "fe8", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["source"] == "angle_spectral"
    assert doc["values"][0] == pytest.approx(-27.64468792, abs=1e-7)


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"preset": "lipkin", "chi": 1.5, "Ns": 10, "format": "json"}))
    _, out, _ = run(["angle", "--config", str(cfg), "--Ns", "20"], capsys)
    doc = json.loads(out)
    assert doc["model"]["j"] == 10


def test_env_output_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(cli.OUTDIR_ENV, str(tmp_path))
    assert cli.main(["exact", "--preset", "mn12"]) == 0
    assert (tmp_path / "exact.csv").read_text().startswith("# unit=kelvin")


def test_sweep_range(capsys):
    code, out, _ = run(["sweep", "--preset", "lipkin", "--chi", "1", "--Ns", "4:8:2"], capsys)
    header, rows, _ = io.read_csv(out)
    assert code == 0 and header[0] == "parameter_value"
    assert [r[0] for r in rows] == ["4", "6", "8"]


@pytest.mark.parametrize("argv, fragment", [
    (["exact", "--preset", "ni4"], "unknown preset"),
    (["exact", "--preset", "fe8", "--E", "0.5"], "0 < E < D"),
    (["exact", "--preset", "lipkin", "--Ns", "abc"], "expects a number"),
    (["sweep", "--preset", "lipkin", "--Ns", "10:4:2"], "empty"),
    (["exact", "--preset", "fe8", "--out", "/nonexistent/dir/x.csv"], "cannot write"),
    (["solve", "--preset", "mn12", "--h", "0.3"], "unbounded below"),
    (["angle", "--A", "1", "--j", "3", "--form", "closed"], "needs a --preset"),
])
def test_config_errors_exit_2(argv, fragment, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and fragment in err
