import csv
import io
import json

import pytest

from toriccodes.config import reset_settings
from toriccodes.main import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def test_params_on_the_line(capsys):
    code, payload = run_json(capsys, "params", "--p", "5", "--m", "1", "--s", "2", "--d", "1")
    assert code == 0 and payload["success"]
    row = payload["data"]["rows"][0]
    assert (row["n"], row["k"], row["delta"], row["source"], row["mds"]) == (4, 2, 3, "both-agree", True)


def test_params_on_a_bipartite_clutter(capsys, k22_file):
    code, payload = run_json(capsys, "params", "--p", "3", "--m", "1", "--clutter", str(k22_file), "--d", "1")
    assert code == 0
    row = payload["data"]["rows"][0]
    assert (row["n"], row["k"], row["delta"], row["source"]) == (4, 4, 1, "both-agree")


def test_params_past_the_regularity(capsys):
    code, payload = run_json(capsys, "params", "--p", "2", "--m", "2", "--s", "3", "--d", "4")
    assert code == 0
    assert payload["data"]["rows"][0]["delta"] == 1


@pytest.mark.parametrize("p,m,s,lo,hi,deltas", [
    ("2", "2", "3", "1", "4", [6, 3, 2, 1]),
    ("5", "1", "2", "1", "4", [3, 2, 1, 1]),
    ("3", "1", "4", "1", "3", [4, 2, 1]),
])
def test_table_csv(capsys, p, m, s, lo, hi, deltas):
    code, out = run_cli(capsys, "table", "--p", p, "--m", m, "--s", s, "--d-range", lo, hi, "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["delta_oracle"]) for r in rows] == deltas
    assert [int(r["delta_formula"]) for r in rows] == deltas
    assert list(rows[0]) == ["q", "s", "d", "n", "k", "delta_formula", "delta_oracle", "hilbert",
                             "singleton_defect", "mds"]


def test_table_mds_on_the_line(capsys):
    _, out = run_cli(capsys, "table", "--p", "5", "--s", "2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    # default range 1 .. (s-1)(q-2)+1
    assert [r["d"] for r in rows] == ["1", "2", "3", "4"]
    assert [r["mds"] for r in rows[:3]] == ["true", "true", "true"]


def test_genmat_text(capsys):
    code, out = run_cli(capsys, "genmat", "--p", "3", "--s", "2", "--d", "1", "--format", "text")
    assert code == 0
    assert out == "1 1\n1 2\n"


def test_genmat_json(capsys):
    _, payload = run_json(capsys, "genmat", "--p", "3", "--s", "2", "--d", "1")
    assert payload["data"]["entries"] == [[1, 1], [1, 2]]
    assert payload["data"]["k_rows"] == 2


def test_kernel_exports(capsys):
    code, out = run_cli(capsys, "kernel", "--p", "3", "--s", "2", "--d", "0", "--format", "text")
    assert code == 0
    assert out == "# kernel q=3 s=2 d=0 size=0\n"
    _, payload = run_json(capsys, "kernel", "--p", "3", "--s", "2", "--d", "2")
    assert payload["data"]["size"] == 1
    terms = payload["data"]["polynomials"][0]["terms"]
    assert sorted(t["exps"] for t in terms) == [[0, 2], [2, 0]]


def test_export_needs_a_degree(capsys):
    code, payload = run_json(capsys, "genmat", "--p", "3", "--s", "2")
    assert code == 2
    assert payload["error"]["code"] == "PRECONDITION_FAILED"


def test_hilbert(capsys):
    code, payload = run_json(capsys, "hilbert", "--p", "2", "--m", "2", "--s", "2")
    assert code == 0
    data = payload["data"]
    assert (data["values"], data["regularity"], data["bound"], data["ci"]) == ([1, 2, 3], 2, 2, True)
    assert data["numerator"] == data["ci_numerator"] == [1, 1, 1]


def test_torus_check(capsys, triangle_file, k22_file):
    _, payload = run_json(capsys, "torus-check", "--p", "3", "--clutter", str(triangle_file))
    assert payload["data"]["ci"] is True
    assert payload["data"]["generators"] == ["1*t1^2 + 2*t3^2", "1*t2^2 + 2*t3^2"]
    _, payload = run_json(capsys, "torus-check", "--p", "3", "--clutter", str(k22_file))
    assert payload["data"]["ci"] is False
    assert payload["data"]["bipartite"] == [2, 2]


def test_bounds(capsys):
    code, payload = run_json(capsys, "bounds", "--p", "3", "--s", "2", "--d", "1", "--poly", "t1 - t2")
    assert code == 0
    assert payload["data"]["bounds"]["refined"] == 2
    assert payload["data"]["check"]["torus_zeros"] == 2
    code, payload = run_json(capsys, "bounds", "--p", "3", "--s", "2", "--samples", "10", "--seed", "1")
    assert code == 0
    assert payload["data"]["sweep"]["cases"] == 12


def test_bounds_text_output(capsys):
    code, out = run_cli(capsys, "bounds", "--p", "3", "--s", "2", "--d", "1", "--format", "text")
    assert code == 0
    assert "section=bounds" in out and "refined=2" in out


def test_exactly_one_input(capsys, k22_file):
    code, payload = run_json(capsys, "params", "--p", "3", "--s", "2", "--clutter", str(k22_file), "--d", "1")
    assert code == 2
    assert payload["error"]["code"] == "PRECONDITION_FAILED"
    code, payload = run_json(capsys, "params", "--p", "3", "--d", "1")
    assert code == 2


def test_positive_caps(capsys):
    code, payload = run_json(capsys, "params", "--p", "3", "--s", "2", "--d", "1", "--cap-points", "0")
    assert code == 2


def test_cap_exceeded_exit_code(capsys):
    code, payload = run_json(capsys, "params", "--p", "5", "--s", "3", "--d", "3", "--cap-codewords", "100")
    assert code == 2
    assert payload["error"]["code"] == "CAP_EXCEEDED"
    assert payload["error"]["details"]["cap"] == 100


def test_discrepancy_exit_code(capsys, monkeypatch):
    monkeypatch.setattr("toriccodes.codes.service.min_distance_torus_formula", lambda q, s, d: 5)
    code, payload = run_json(capsys, "params", "--p", "3", "--s", "3", "--d", "1")
    assert code == 3
    assert payload["error"]["code"] == "DISCREPANCY"


def test_invalid_clutter_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 3, "edges": [[1, 2], [1, 2, 3]]}))
    code, payload = run_json(capsys, "params", "--p", "3", "--clutter", str(path), "--d", "1")
    assert code == 2
    assert payload["error"]["code"] == "INVALID_CLUTTER"


def test_text_errors(capsys):
    code, out = run_cli(capsys, "params", "--p", "4", "--s", "2", "--d", "1", "--format", "text")
    assert code == 2
    assert out.startswith("error PRECONDITION_FAILED:")


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out = run_cli(capsys, "params", "--p", "3", "--s", "2", "--d", "1", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["data"]["rows"][0]["n"] == 2


def test_missing_required_flag_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["params", "--s", "2"])
    assert info.value.code == 2


def test_huge_characteristic_fails_fast(capsys):
    code, payload = run_json(capsys, "params", "--p", "1000000000000000003", "--s", "2", "--d", "1")
    assert code == 2
    assert payload["error"]["code"] == "CAP_EXCEEDED"


def test_hilbert_csv_keeps_the_profile(capsys):
    code, out = run_cli(capsys, "hilbert", "--p", "2", "--m", "2", "--s", "2", "--format", "csv")
    assert code == 0
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["values"] == "1;2;3"
    assert row["numerator"] == "1;1;1"
    assert row["regularity"] == "2"


def test_bad_log_level_is_a_precondition(capsys, monkeypatch):
    monkeypatch.setenv("TORIC_LOG_LEVEL", "LOUD")
    reset_settings()
    code, payload = run_json(capsys, "params", "--p", "3", "--s", "2", "--d", "1")
    assert code == 2
    assert payload["error"]["code"] == "PRECONDITION_FAILED"


def test_unparsable_polynomial(capsys):
    code, payload = run_json(capsys, "bounds", "--p", "3", "--s", "2", "--poly", "t1 - - t2")
    assert code == 2
    assert payload["error"]["code"] == "PRECONDITION_FAILED"
