import json
import subprocess
import sys

import pytest

from lieinv.algebra import load_algebra
from lieinv.catalog import catalog_get
from lieinv.cli import run
from lieinv.functions import invariant_function, render_table

G34 = {"name": "g_{3,4}(a)", "dim": 3, "kind": "lie", "parameters": {"a": "2"},
       "brackets": [["e1", "e3", "e1"], ["e2", "e3", "a*e2"]]}
EL1 = {"dim": 4, "kind": "lie", "brackets": [
    ["e1", "e2", "-e1-e2+e3"], ["e1", "e3", "-6*e2+4*e3"], ["e1", "e4", "2*e1-e2+e4"],
    ["e2", "e3", "3*e1-9*e2+5*e3"], ["e2", "e4", "4*e1-2*e2+2*e4"], ["e3", "e4", "6*e1-3*e2+3*e4"]]}


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        p = tmp_path / name
        p.write_text(json.dumps(data, ensure_ascii=False), encoding="utf-8")
        return str(p)
    return write


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(files, capsys):
    code, out, _ = call(capsys, "check", files("g34.json", G34))
    assert code == 0
    assert out.strip() == "valid lie algebra, dim 3"


def test_check_reports_violations_in_json(files, capsys):
    bad = {"dim": 3, "brackets": [["e1", "e2", "e3"], ["e1", "e3", "e1"]]}
    code, out, _ = call(capsys, "check", "--format", "json", files("bad.json", bad))
    assert code == 0
    data = json.loads(out)
    assert data["valid"] is False and data["violations"]


def test_fun_table_matches_library(files, capsys):
    code, out, _ = call(capsys, "fun", "--which", "psi", files("g34.json", G34))
    assert code == 0
    f = invariant_function(load_algebra(G34), "psi")
    assert out.rstrip("\n") == render_table(f, "ψ")
    assert out.splitlines()[1].split("|")[0].strip() == "ψ"


def test_fun_json_schema(files, capsys):
    code, out, _ = call(capsys, "fun", "--which", "phi", "--format", "json", files("g34.json", G34))
    data = json.loads(out)
    assert code == 0 and data["which"] == "phi"
    assert isinstance(data["generic"], int)
    for item in data["exceptional"]:
        assert set(item) == {"factor", "roots_display", "value"}


def test_identify_example(files, capsys):
    code, out, _ = call(capsys, "identify", files("el1.json", EL1))
    assert code == 0
    assert out.strip() == "g_{4,2}(a), a = 2"


def test_identify_catalog_label(capsys):
    code, out, _ = call(capsys, "identify", "scrambled-2")
    assert code == 0 and out.strip() == "g_{2,1}⊕g_{2,1}"


def test_inv(capsys):
    code, out, _ = call(capsys, "inv", "l_{17,9}")
    assert code == 0
    assert out.strip().endswith("[16,19,9,11]")


def test_contract_pair_and_criteria_only(capsys):
    code, out, _ = call(capsys, "contract", "sl_2", "g_{3,4}(-1)")
    assert code == 0 and "Exists" in out.splitlines()[0]
    code, out, _ = call(capsys, "contract", "--criteria-only", "sl_2", "g_{3,4}(-1)")
    assert code == 0 and "NotExcluded" in out.splitlines()[0]
    code, out, _ = call(capsys, "contract", "(g-27)", "(g-12)")
    assert code == 0
    assert "phi0_leq: fail (α = 3/2: 1 > 0)" in out


def test_contract_scan3(capsys):
    code, out, _ = call(capsys, "contract", "--scan3")
    assert code == 0
    assert len(out.strip().splitlines()) == 7
    assert "sl(2,C) -> g_{3,4}(-1)" in out


def test_scan_output_independent_of_threads(capsys, monkeypatch):
    outs = []
    for threads in ("1", "3"):
        monkeypatch.setenv("LIEINV_THREADS", threads)
        outs.append(call(capsys, "contract", "--scan-jordan2", "--format", "json")[1])
    assert outs[0] == outs[1]


def test_bad_thread_count_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("LIEINV_THREADS", "many")
    code, _, err = call(capsys, "contract", "--scan3")
    assert code == 2 and "LIEINV_THREADS" in err


def test_graded(files, capsys):
    setup = {"group": [2], "grades": [1, 0, 1], "epsilon": [["1", "1"], ["1", "0"]]}
    code, out, _ = call(capsys, "graded", "sl_2", files("setup.json", setup))
    assert code == 0
    assert out.strip().splitlines() == ["[e1, e2] = e1", "[e2, e3] = e3"]


def test_graded_error_json(files, capsys):
    setup = {"group": [2], "grades": [0, 0, 1], "epsilon": [["1", "1"], ["1", "1"]]}
    code, out, _ = call(capsys, "graded", "--format", "json", "sl_2", files("setup.json", setup))
    assert code == 1
    assert json.loads(out)["error"] == "grading_not_closed"


def test_limit(files, capsys):
    u = files("u.json", [["ε", "0", "0"], ["0", "1", "0"], ["0", "0", "ε"]])
    code, out, _ = call(capsys, "limit", "sl_2", u)
    assert code == 0
    assert out.strip().splitlines() == ["[e1, e2] = e1", "[e2, e3] = e3"]


def test_limit_divergence_is_a_domain_error(files, capsys):
    u = files("u.json", [["1/ε", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    code, _, err = call(capsys, "limit", "sl_2", u)
    assert code == 1 and "lieinv:" in err


def test_catalog_list_and_get(capsys):
    code, out, _ = call(capsys, "catalog", "--list")
    assert code == 0 and "(g-17)" in out and "l_{17,7}" in out
    code, out, _ = call(capsys, "catalog", "--get", "g_{3,4}", "--param", "a=2", "--format", "json")
    assert code == 0
    assert load_algebra(out).prod == catalog_get("g_{3,4}", {"a": 2}).prod


@pytest.mark.parametrize("argv", [
    ["fun", "--which", "chi", "sl_2"],
    ["contract", "sl_2"],
    ["contract", "--scan3", "sl_2", "g_{3,1}"],
    ["catalog", "--get", "g_{3,4}", "--param", "a"],
    ["check", "no/such/file.json"],
    [],
])
def test_usage_errors(argv, capsys):
    assert call(capsys, *argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["identify", "l_{17,9}"],
    ["fun", "nonsense-label"],
    ["catalog", "--get", "g_{3,4}"],
    ["contract", "sl_2", "(g-1)"],
])
def test_domain_errors(argv, capsys):
    assert call(capsys, *argv)[0] == 1


def test_domain_error_json_has_kind(capsys):
    code, out, _ = call(capsys, "identify", "--format", "json", "l_{17,9}")
    assert code == 1
    assert json.loads(out)["error"] == "no_match"


def test_malformed_json_file(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text("{", encoding="utf-8")
    assert call(capsys, "check", str(p))[0] == 1


def test_help_exits_zero(capsys):
    assert call(capsys, "--help")[0] == 0


def test_console_script_output_is_deterministic(files):
    path = files("el1.json", EL1)
    argv = [sys.executable, "-m", "lieinv.cli", "fun", "--which", "phi0", "--format", "json", path]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


def test_check_text_for_invalid_algebra(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"dim": 3, "brackets": [["e1", "e2", "e3"], ["e1", "e3", "e1"]]}))
    code, out, _ = call(capsys, "check", str(p))
    assert code == 0
    assert out.startswith("invalid lie algebra, dim 3\n  jacobi fails at")
