import csv
import io
import json
import subprocess
import sys

import pytest

from chromabound import bounds
from chromabound.cli import main
from chromabound.corpus import petersen
from chromabound.graph import serialize_edge_list


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_table_single_row(capsys):
    code, out, _ = run(["table", "--row", "3:3", "--grid", "257"], capsys)
    table = rows(out)
    assert code == 0
    assert table[0] == ["delta", "g", "a_star", "b_star", "c_over_delta", "k_g"]
    assert len(table) == 2
    assert float(table[1][4]) == pytest.approx(4.55449, abs=1e-3)
    assert len(table[1][4].replace(".", "")) >= 6


def test_table_infinite_girth(capsys):
    code, out, _ = run(["table", "--row", "4:inf"], capsys)
    (_, data) = rows(out)
    assert data[1] == "inf" and data[5] == ""
    assert float(data[4]) == pytest.approx(bounds.c_delta_g(4, bounds.INF).C_over_delta, rel=1e-8)


def test_table_json(capsys):
    code, out, _ = run(["table", "--row", "5:3", "--format", "json"], capsys)
    assert json.loads(out)[0]["delta"] == "5"


def test_table_is_byte_stable(capsys):
    first = run(["table", "--row", "3:5", "--row", "6:3"], capsys)[1]
    second = run(["table", "--row", "3:5", "--row", "6:3"], capsys)[1]
    assert first == second


@pytest.mark.parametrize("row", ["3", "3:2", "0:3", "x:y"])
def test_table_bad_row(row, capsys):
    assert run(["table", "--row", row], capsys)[0] == 2


def test_sweep_by_delta(capsys):
    code, out, _ = run(["sweep", "--mode", "by-delta", "--fixed", "3", "--start", "3", "--stop", "20", "--grid", "257"], capsys)
    table = rows(out)
    assert table[0] == ["delta", "c_over_delta"]
    vals = [float(r[1]) for r in table[1:]]
    assert len(vals) == 18
    assert all(b >= a - 1e-6 for a, b in zip(vals, vals[1:]))


def test_sweep_by_g(capsys):
    code, out, _ = run(["sweep", "--mode", "by-g", "--fixed", "3", "--start", "3", "--stop", "100", "--grid", "129"], capsys)
    vals = [float(r[1]) for r in rows(out)[1:]]
    assert all(b <= a + 1e-6 for a, b in zip(vals, vals[1:]))
    assert vals[-1] == pytest.approx(2.49247, abs=1e-3)


def test_sweep_empty_range(capsys):
    code, out, _ = run(["sweep", "--mode", "by-g", "--fixed", "3", "--start", "10", "--stop", "5"], capsys)
    assert code == 0 and out == "g,c_over_delta\n"


def test_sweep_bad_range(capsys):
    assert run(["sweep", "--mode", "by-g", "--fixed", "3", "--start", "2", "--stop", "5"], capsys)[0] == 2


def test_verify_petersen(tmp_path, capsys):
    f = tmp_path / "petersen.txt"
    f.write_text(serialize_edge_list(petersen()))
    code, out, _ = run(["verify", str(f)], capsys)
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_out_file(tmp_path, capsys):
    f = tmp_path / "p.txt"
    f.write_text("0 1\n1 2\n2 0\n")
    target = tmp_path / "report.json"
    assert run(["verify", str(f), "--out", str(target), "--order", "random", "--seed", "5"], capsys)[0] == 0
    assert json.loads(target.read_text())["delta"] == 2


def test_verify_malformed(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("0 1\n1 two\n")
    code, _, err = run(["verify", str(f)], capsys)
    assert code == 2 and "line 2" in err
    assert run(["verify", str(tmp_path / "missing.txt")], capsys)[0] == 2


def test_verify_dense_graph_hits_cap(tmp_path, capsys):
    f = tmp_path / "dense.txt"
    f.write_text("".join(f"{i} {j}\n" for i in range(30) for j in range(i + 1, 30)))
    assert run(["verify", str(f)], capsys)[0] == 3


def test_bad_flags(capsys):
    assert run(["table", "--grid", "10"], capsys)[0] == 2
    assert run(["table", "--tol", "0"], capsys)[0] == 2


def test_selfcheck_single_suite(capsys):
    code, out, _ = run(["selfcheck", "--only", "series-identities"], capsys)
    assert code == 0 and "[PASS] series-identities" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chromabound", "table", "--row", "3:3", "--grid", "65"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("delta,g")
