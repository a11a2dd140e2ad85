import csv
import io
import json
import subprocess
import sys

import pytest

from dgoperads import __version__
from dgoperads.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_version():
    res = subprocess.run([sys.executable, "-m", "dgoperads", "--version"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.strip() == f"dgoperads {__version__}"


@pytest.mark.parametrize("argv", [
    ["verify", "nope", "--max-arity", "3"],
    ["verify", "pi", "--max-arity", "0"],
    ["homology", "pi", "--arity", "0"],
    ["dual", "pi-lambda"],
    ["exactness", "--row", "9"],
    ["table", "--max-arity", "0"],
    ["frobnicate"],
    ["dual", "all", "--threads", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("dgoperads: error:")


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "pasc", "--max-arity", "3", "--json", "-")
    assert code == 0
    report = json.loads(out[out.index("{"):])
    assert report["tool"] == "dgoperads"
    assert report["schema"] == 1
    assert report["version"] == __version__
    assert report["conventions"]["tau"] == {"1": 3, "2": 1, "3": 2}
    checks = report["checks"]
    assert {c["check"] for c in checks} >= {"axioms:pasc", "relations:pasc", "presentation:pasc"}
    for c in checks:
        assert set(c) == {"check", "params", "status", "expected", "actual", "elapsed_ms"}
        assert c["status"] == "pass"


def test_json_to_file(tmp_path, capsys):
    path = tmp_path / "dual.json"
    code, out, _ = run(capsys, "dual", "all", "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text(encoding="utf-8"))
    assert [c["check"] for c in data["checks"]] == ["dual:pi-coprod", "dual:pasc-lambda",
                                                     "dual:kprime-trias"]
    assert out.count("pass") == 3


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--max-arity", "3", "--csv", "-")
    assert code == 0
    start = out.index("operad,n,k,dim")
    rows = list(csv.reader(io.StringIO(out[start:])))
    assert rows[0] == ["operad", "n", "k", "dim"]
    assert ["pi", "3", "1", "6"] in rows


def test_homology_output(capsys):
    code, out, _ = run(capsys, "homology", "coprod", "--arity", "3")
    assert code == 0
    assert out.startswith("conjectural-pass")
    assert "H_0 = Z^2" in out


def test_exactness_with_threads(capsys):
    code, out, _ = run(capsys, "exactness", "--row", "0", "--max-arity", "3", "--threads", "2")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.strip()]
    assert [ln.split()[1] for ln in lines] == [f"exactness:row{r}" for r in range(1, 6)]


def test_morphisms_command(capsys):
    code, out, _ = run(capsys, "morphisms", "--squares", "--degree-zero", "--max-arity", "4")
    assert code == 0
    assert out.count("\n") == 22 + 8 + 1


def test_failure_exit_code(monkeypatch, capsys):
    import dgoperads.checks as checks
    real = checks.duality

    def broken(pair):
        res = real(pair)
        res.status = checks.FAIL
        return res

    monkeypatch.setattr(checks, "duality", broken)
    code, out, _ = run(capsys, "dual", "kprime-trias")
    assert code == 1
    assert out.startswith("fail")
