import io
import json
import subprocess
import sys

import pytest

from kpowerdom.cli import InputError, main, parse_family, parse_range
from kpowerdom.graphcore import graph6_decode, graph6_encode, is_isomorphic
from kpowerdom.graphcore import families as fam
from kpowerdom.verify import build_ng_family


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def rows(text):
    return [line.split("\t") for line in text.splitlines() if not line.startswith("#")]


def test_parse_range():
    assert parse_range("9..11") == [9, 10, 11]
    assert parse_range("3,5") == [3, 5]
    assert parse_range("7") == [7]
    with pytest.raises(InputError):
        parse_range("a..b")


def test_parse_family():
    assert parse_family("spider:1,1,4")[0] == fam.spider(1, 1, 4)
    assert len(parse_family("ng:9..11")) == 3
    with pytest.raises(InputError):
        parse_family("nosuch:3")


def test_compute_path6():
    code, out = run("compute", "--family", "path:6", "--k", "1")
    assert code == 0
    (row,) = rows(out)
    assert row[5:7] == ["3", "5"]


def test_compute_cycle5_and_k2():
    (c5,) = rows(run("compute", "--family", "cycle:5")[1])
    (k2,) = rows(run("compute", "--g6", "A_")[1])
    assert c5[4:7] == ["1", "2", "2"]
    assert k2[0] == "A_" and k2[4:6] == ["1", "1"]


def test_compute_jsonl_trace():
    code, out = run("compute", "--family", "path:5", "--format", "jsonl", "--trace")
    rec = json.loads(out)
    assert rec["ppt"] == 2 and rec["efficient_witness"] == [2]
    assert rec["trace"]["steps"] == [[2], [1, 2, 3], [0, 1, 2, 3, 4]]


def test_compute_tsv_trace():
    code, out = run("compute", "--family", "path:5", "--trace")
    assert out.splitlines()[1].split("\t")[-1] == "{2}>{1,2,3}>{0,1,2,3,4}"


def test_input_errors_exit_2(tmp_path, capsys):
    assert run("compute", "--g6", "A\x01")[0] == 2
    assert run("compute")[0] == 2
    assert run("compute", "--family", "path:3", "--k", "0")[0] == 2
    bad = tmp_path / "bad.g6"
    bad.write_text("A_\nA\x01\n")
    assert run("compute", "--file", str(bad))[0] == 2
    assert "line 2" in capsys.readouterr().err
    assert run("verify", "no-such-tag")[0] == 2
    assert run("families", "cycle:2")[0] == 2
    assert run("compute", "--family", "cycle:5", "--g6", "A_")[0] == 2


def test_verify_commands():
    code, out = run("verify", "path-cycle-ppt", "--n-max", "20", "--k-max", "3")
    assert code == 0 and rows(out)[0][3] == "pass"
    code, out = run("verify", "extreme-n-minus-1", "--n-max", "6", "--format", "jsonl")
    rec = json.loads(out)
    assert code == 0 and rec["passed"]
    got = [graph6_decode(g) for g in rec["attaining"]]
    assert len(got) == 2 and {G.n for G in got} == {1, 2}
    code, out = run("verify", "ng-family", "--n", "9..15")
    assert code == 0


def test_verify_all_defaults():
    code, out = run("verify", "all", "--workers", "2")
    table = rows(out)
    assert code == 0 and len(table) == 22
    assert all(r[3] == "pass" for r in table)


def test_ng_scan(tmp_path):
    code, out = run("ng-scan", "--n-max", "6", "--connected-only")
    assert code == 0
    table = rows(out)
    assert [int(r[0]) for r in table] == list(range(1, 7))
    assert all(int(r[2]) <= int(r[0]) and r[3] == "0" for r in table)
    p = tmp_path / "g9.g6"
    p.write_text(graph6_encode(build_ng_family(9)) + "\n")
    code, out = run("ng-scan", "--file", str(p), "--list-extremal")
    assert code == 0
    assert rows(out)[0][:3] == ["9", "1", "9"]
    assert out.splitlines()[-1].startswith("extremal\t9\t")
    code, out = run("ng-scan", "--family", "empty:5")
    assert rows(out)[0][2] == "1"


def test_families_command():
    code, out = run("families", "spider:1,1,4")
    assert code == 0 and graph6_decode(out.strip()).n == 7
    assert len(run("families", "ng:9..11")[1].splitlines()) == 3
    code, out = run("families", "subdiv-decrease:7", "--subdivided")
    assert graph6_decode(out.strip()).n == 14
    assert is_isomorphic(graph6_decode(run("families", "path:4")[1].strip()), fam.path(4))


def test_workers_output_identical():
    a = run("compute", "--family", "path:3..9", "--family", "cycle:3..9", "--workers", "1")
    b = run("compute", "--family", "path:3..9", "--family", "cycle:3..9", "--workers", "2")
    assert a == b
    a = run("ng-scan", "--n-max", "6", "--workers", "1")
    b = run("ng-scan", "--n-max", "6", "--workers", "2")
    assert a == b


def test_module_entry_point_and_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "kpowerdom", "ng-scan", "--file", "-"],
        input=graph6_encode(build_ng_family(9)) + "\n",
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1].split("\t")[:3] == ["9", "1", "9"]
