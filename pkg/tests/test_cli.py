from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from gbei.cli import (
    EXIT_CAP,
    EXIT_DISCONNECTED,
    EXIT_FAIL,
    EXIT_OK,
    EXIT_PARSE,
    FAMILIES,
    SWEEP_COLUMNS,
    family_graph,
    main,
)
from gbei.graph import cycle_graph, write_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.g"
    write_graph(cycle_graph(4), path)
    return str(path)


# -- analyze ------------------------------------------------------------------------------


def test_analyze_text(capsys, c4_file):
    code, out, _ = run(capsys, "analyze", c4_file)
    assert code == EXIT_OK
    assert "ht=3 mu=4" in out
    assert "cd: 4" in out and "ara: 4" in out
    assert "cci=no" in out


def test_analyze_json_schema(capsys, c4_file):
    code, out, _ = run(capsys, "analyze", c4_file, "--json")
    d = json.loads(out)
    assert code == EXIT_OK
    assert list(d) == ["graph", "m", "char", "ht", "mu", "bounds", "flags", "provenance"]
    assert d["graph"] == {"n": 4, "edges": [[1, 2], [1, 4], [2, 3], [3, 4]]}
    assert d["bounds"]["cd"] == {"lo": 4, "hi": 4}
    assert d["flags"]["aci"] == "yes"


def test_analyze_family_and_char(capsys):
    code, out, _ = run(capsys, "analyze", "complete:5", "--m", "3", "--char", "7", "--json")
    d = json.loads(out)
    assert code == EXIT_OK
    assert d["ht"] == 8 and d["bounds"]["cd"] == {"lo": 8, "hi": 8}
    assert d["bounds"]["ara"]["hi"] == 12 and d["flags"]["cci"] == "yes"


def test_analyze_is_deterministic(capsys):
    outs = {run(capsys, "analyze", "k4_plus_paths:8", "--json")[1] for _ in range(3)}
    assert len(outs) == 1


# -- exit codes --------------------------------------------------------------------------------


def test_disconnected_exit_code(capsys, tmp_path):
    path = tmp_path / "two.g"
    path.write_text("4\n1 2\n3 4\n")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == EXIT_DISCONNECTED and "not connected" in err
    assert run(capsys, "cutsets", str(path))[0] == EXIT_DISCONNECTED


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "nosuchfile.g"],
        ["analyze", "cycle:2"],
        ["analyze", "pentagon:5"],
        ["analyze", "cycle:x"],
        ["analyze", "cycle:4", "--m", "1"],
        ["analyze", "cycle:4", "--char", "4"],
        ["verify", "builtin:nope"],
        ["sweep", "path", "--from", "5", "--to", "2"],
        ["frobnicate"],
        [],
    ],
)
def test_parse_exit_codes(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == EXIT_PARSE


def test_bad_graph_file(capsys, tmp_path):
    path = tmp_path / "bad.g"
    path.write_text("3\n1 2 3\n")
    assert run(capsys, "analyze", str(path))[0] == EXIT_PARSE


def test_cap_exit_code(capsys):
    code, out, _ = run(capsys, "decompose", "cycle:5", "--max-gb-terms", "5")
    assert code == EXIT_CAP and "not_attempted" in out
    assert run(capsys, "ideal", "cycle:5", "--gb", "--max-gb-terms", "3")[0] == EXIT_CAP


# -- other subcommands ----------------------------------------------------------------------------


def test_cutsets(capsys, c4_file):
    code, out, _ = run(capsys, "cutsets", c4_file, "--json")
    d = json.loads(out)
    assert code == EXIT_OK
    assert [r["T"] for r in d["cut_sets"]] == [[], [1, 3], [2, 4]]
    assert [r["height"] for r in d["cut_sets"]] == [3, 4, 4] and d["ht"] == 3


def test_ideal(capsys):
    code, out, _ = run(capsys, "ideal", "path:3", "--gb", "--json")
    d = json.loads(out)
    assert code == EXIT_OK
    assert d["mu"] == 2 and d["height"] == 2
    assert d["generators"] == ["-x[1][2]*x[2][1] + x[1][1]*x[2][2]", "-x[1][3]*x[2][2] + x[1][2]*x[2][3]"]
    code, out, _ = run(capsys, "ideal", "path:2", "--order", "lex")
    assert "x[1][1]*x[2][2] - x[1][2]*x[2][1]" in out


def test_decompose(capsys, c4_file):
    code, out, _ = run(capsys, "decompose", c4_file)
    assert code == EXIT_OK and "verified" in out


def test_verify_builtin_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "builtin:c4-two-primes", "--json")
    d = json.loads(out)
    assert code == EXIT_OK and d["status"] == "pass"
    assert [c["found"] for c in d["claims"]] == [2, 2]

    assert run(capsys, "catalog", "--write", str(tmp_path))[0] == EXIT_OK
    path = tmp_path / "c4-two-primes.cert"
    assert run(capsys, "verify", str(path))[0] == EXIT_OK
    assert run(capsys, "verify", str(path), "--char", "5")[0] == EXIT_PARSE

    lines = path.read_text().splitlines()
    first_witness = lines.index("witness:") + 1
    del lines[first_witness]
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == EXIT_FAIL
    assert out.count("FAIL") == 2


def test_verify_cap(capsys):
    assert run(capsys, "verify", "builtin:k4-pendants", "--max-gb-terms", "2")[0] == EXIT_CAP


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    rows = json.loads(out)
    assert code == EXIT_OK and len(rows) == 11
    code, out, _ = run(capsys, "catalog", "--verify", "--char", "3")
    assert code == EXIT_OK and out.count("[pass]") == 11


def test_sweep_csv(capsys):
    code, out, _ = run(capsys, "sweep", "complete_bipartite", "--from", "1", "--to", "6")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK
    assert list(rows[0]) == list(SWEEP_COLUMNS)
    for r in rows:
        p = int(r["param"])
        assert r["pd_lo"] == r["pd_hi"] == r["ara_lo"] == r["ara_hi"] == str(2 * p)


def test_sweep_workers_do_not_change_output(capsys):
    one = run(capsys, "sweep", "cycle", "--from", "3", "--to", "8", "--workers", "1")[1]
    many = run(capsys, "sweep", "cycle", "--from", "3", "--to", "8", "--workers", "6")[1]
    assert one == many


def test_sweep_decompose_column(capsys):
    code, out, _ = run(capsys, "sweep", "path", "--from", "2", "--to", "4", "--decompose")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK and [r["decompose"] for r in rows] == ["verified"] * 3


def test_every_family_builds_at_its_minimum():
    for name, (_, least, _) in FAMILIES.items():
        g = family_graph(name, least)
        assert g.is_connected()


def test_console_entry_points(tmp_path):
    for cmd in (["gbei"], [sys.executable, "-m", "gbei"]):
        res = subprocess.run(cmd + ["analyze", "star:3", "--m", "3"], capture_output=True, text=True)
        assert res.returncode == 0, res.stderr
        assert "cd: 4..6" in res.stdout
