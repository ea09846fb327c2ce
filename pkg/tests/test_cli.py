import csv
import io
import json
import subprocess
import sys

import pytest

from discrete_special.cli import IDENTITY_KEYS, Grid, UsageError, run


def invoke(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.mark.parametrize("text, count", [("0:41:0.5", 83), ("0:1:1", 2), ("2:2:0.1", 1), ("0:3:0.05", 61)])
def test_grid_is_inclusive(text, count):
    assert len(Grid.parse(text).values()) == count


@pytest.mark.parametrize("text", ["0:1:0", "1:0:0.1", "0:1", "a:b:c", "0:inf:1", "0:1:-1"])
def test_grid_rejects_malformed(text):
    with pytest.raises(UsageError):
        Grid.parse(text)


def test_bessel_table_rows():
    code, out = invoke("bessel-table", "--n-points", "21", "--orders", "0", "--grid", "0:41:0.5")
    table = rows(out)
    assert code == 0 and len(table) == 83
    assert float(table[0]["abs_diff"]) == 0.0 and table[0]["within_tolerance"] == "true"


def test_bessel_table_summary_in_region():
    code, out = invoke("bessel-table", "--n-points", "61", "--orders", "10",
                       "--grid", "0:38:1", "--format", "json")
    payload = json.loads(out)
    series = payload["summary"]["series"][0]
    assert series["max_diff"] < 1e-12 and series["valid_up_to"] == 38.0
    assert payload["summary"]["tolerance"] == 1e-12


def test_summary_recomputable_from_rows():
    code, out = invoke("bessel-table", "--n-points", "21", "--orders", "0,3",
                       "--grid", "0:40:1", "--format", "json")
    payload = json.loads(out)
    for series in payload["summary"]["series"]:
        mine = [r for r in payload["rows"] if r[0] == series["series"][0]]
        assert series["max_diff"] == max(r[4] for r in mine)
        leading = []
        for r in mine:
            if not r[5]:
                break
            leading.append(r[1])
        assert series["valid_up_to"] == leading[-1]


@pytest.mark.parametrize("argv", [
    ["bessel-table", "--grid", "0:1:0"],
    ["bessel-table", "--n-points", "20"],
    ["identity-suite", "--n-points", "20"],
    ["mathieu-angular", "--n-points", "5", "--orders", "3"],
    ["bessel-table", "--orders", "x"],
    ["bessel-table", "--tolerance", "-1"],
    ["nonsense"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert invoke(*argv)[0] == 2


def test_even_lattice_message(capsys):
    invoke("identity-suite", "--n-points", "20")
    assert "odd" in capsys.readouterr().err


def test_angular_lattice_agreement():
    code, out = invoke("mathieu-angular", "--n-points", "41", "--q", "2", "--orders", "0-5")
    table = rows(out)
    assert code == 0
    assert len(table) == 41 * 11
    assert max(float(r["abs_diff"]) for r in table) < 1e-12


def test_angular_zero_q():
    _, out = invoke("mathieu-angular", "--q", "0", "--orders", "0,1,2,3", "--grid", "0:6.2:0.1")
    lattice = [r for r in rows(out) if r["point"] == "lattice"]
    assert max(float(r["abs_diff"]) for r in lattice) < 1e-14


def test_angular_continued_rows_show_crossings():
    _, out = invoke("mathieu-angular", "--n-points", "5", "--q", "2", "--orders", "0",
                    "--grid", "0:6.28:0.01")
    cont = [r for r in rows(out) if r["point"] == "continued"]
    signed = [float(r["discrete"]) - float(r["continuous"]) for r in cont]
    changes = sum(1 for a, b in zip(signed, signed[1:]) if a * b < 0)
    assert changes >= 10


def test_radial_table():
    code, out = invoke("mathieu-radial", "--n-points", "21", "--q", "2", "--orders", "0,1,2",
                       "--grid", "0:3.3:0.02")
    table = rows(out)
    assert code == 0
    start = [r for r in table if float(r["varrho"]) == 0.0]
    assert all(float(r["discrete"]) == 0.0 for r in start if r["kind"] == "se")
    small = [float(r["abs_diff"]) for r in table if float(r["varrho"]) <= 2.0]
    assert max(small) < 1e-9


def test_radial_improves_with_lattice_size():
    diffs = []
    for N in ("5", "21"):
        _, out = invoke("mathieu-radial", "--n-points", N, "--orders", "0", "--grid", "1:1:1")
        diffs.append(float(rows(out)[0]["abs_diff"]))
    assert diffs[1] < diffs[0]


def test_identity_suite_default_passes():
    code, out = invoke("identity-suite")
    payload = json.loads(out)
    assert code == 0
    assert tuple(payload["checks"]) == IDENTITY_KEYS
    for value in payload["checks"].values():
        assert set(value) == {"residual", "tolerance", "expect", "passed"}
        assert value["passed"]


def test_identity_suite_reports_contract_violation():
    # orders up to 6 on 21 points are past the aliasing-free range
    code, out = invoke("identity-suite", "--orders", "0-6")
    assert code == 1
    assert not json.loads(out)["checks"]["discrete_orthogonality"]["passed"]


def test_identity_suite_csv():
    code, out = invoke("identity-suite", "--format", "csv")
    assert [r["check"] for r in rows(out)] == list(IDENTITY_KEYS)


def test_identity_suite_is_deterministic():
    assert invoke("identity-suite")[1] == invoke("identity-suite")[1]


def test_ellipse_lattice(tmp_path):
    target = tmp_path / "ellipses.csv"
    code, out = invoke("ellipse-lattice", "--n-points", "21", "--grid", "0.5:1.5:0.5", "--out", str(target))
    assert code == 0 and out == ""
    table = rows(target.read_text())
    assert len(table) == 63
    assert table[0] == {"varrho": "0.5", "m": "0", "x": repr(float(__import__("math").cosh(0.5))), "y": "0.0"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "discrete_special", "ellipse-lattice", "--n-points", "3",
                           "--grid", "0:0:1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "varrho,m,x,y"
