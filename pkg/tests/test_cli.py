import json
import subprocess
import sys

import pytest

from coxtrop.cli import run
from coxtrop.coxgen import all_generators
from coxtrop.multipoly import CoxPoly
from coxtrop.pluecker import MATRIX_G, MATRIX_G_PRIME, TropicalPoint

G_TUPLE = "(5, 11, 10, 4, 13, 15, 9, 18, 12, 15, 4, 10, 1, 9, 3, 6, 14, 8, 11, 14)"


def out_of(capsys, argv, code=0):
    assert run(argv) == code
    return capsys.readouterr()


def test_moneric_from_file(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text(MATRIX_G.to_text())
    assert out_of(capsys, ["moneric", "--matrix", str(path)]).out.strip().startswith("moneric: true")
    path.write_text(json.dumps(MATRIX_G_PRIME.to_json()))
    res = out_of(capsys, ["moneric", "--matrix", str(path), "--json"])
    data = json.loads(res.out)
    assert data["moneric"] is False and data["witnesses"][0]["label"] == "Conic(6)"


def test_trop(capsys):
    assert G_TUPLE in out_of(capsys, ["trop", "--builtin", "G"]).out
    res = out_of(capsys, ["trop", "--builtin", "G", "--with-conic"])
    assert "37" in res.out


def test_parse_errors_exit_2(capsys):
    res = out_of(capsys, ["parse", "t^"], 2)
    assert json.loads(res.err.strip().splitlines()[-1])["error"] == "syntax"
    assert out_of(capsys, ["parse", "t^-1 + 2 + t", "--valuation"]).out.splitlines()[1] == "valuation: -1"


def test_gens_json_round_trip(capsys):
    data = json.loads(out_of(capsys, ["gens", "--builtin", "G", "--json"]).out)
    gens = dict((str(lab), f) for lab, f in all_generators(MATRIX_G).sorted_items())
    assert len(data) == 27
    for entry in data:
        assert CoxPoly.from_json(6, entry["polynomial"]) == gens[entry["label"]]


def test_naruki_eq(capsys):
    res = out_of(capsys, ["naruki-eq", "--builtin", "G", "--other-builtin", "Gpp"])
    assert "naruki_equivalent: true" in res.out and "w: (-4, 0, 0, 0, 0, 0)" in res.out


def test_tgr2(capsys):
    assert "tgr2: true" in out_of(capsys, ["tgr2", "--point", "0,0,0,0,0,1"]).out
    res = out_of(capsys, ["tgr2", "--point", "0,0,0,0,0,1", "--convention", "max"])
    assert "tgr2: false" in res.out and "violation: 1,2,3,4" in res.out
    assert "tgr2: true" in out_of(capsys, ["tgr2", "--inline", "1,0,1,1,1; 0,1,1,1+t,t^2"]).out
    out_of(capsys, ["tgr2", "--point", "1,2,3,4"], 2)


def test_hilbert(capsys):
    assert json.loads(out_of(capsys, ["hilbert", "--system", "elemsym", "--m", "3", "--degree", "4"]).out)["count"] == 4
    res = json.loads(out_of(capsys, ["hilbert", "--system", "degree5", "--n", "3", "--degree", "1,1,1,1"]).out)
    assert res["count"] == res["saturated_count"] == res["system_count"] == 2
    out_of(capsys, ["hilbert", "--system", "elemsym", "--degree", "1,2"], 2)


def test_khovanskii(capsys):
    res = json.loads(out_of(capsys, ["khovanskii", "--system", "elemsym", "--m", "3", "--bound", "3"]).out)
    assert res["status"] == "no_obstruction_up_to_bound"
    res = json.loads(out_of(capsys, ["khovanskii", "--builtin", "Gp"]).out)
    assert res["status"] == "not_applicable_not_moneric"


def test_search(tmp_path, capsys):
    js = tmp_path / "out.json"
    res = out_of(capsys, ["search", "--count", "3", "--seed", "1", "--signs", "one", "--json-out", str(js)])
    lines = res.out.splitlines()
    assert lines[0].startswith("id\tmoneric") and len(lines) == 5
    assert json.loads(lines[-1]) == json.loads(js.read_text())["collisions"]


def test_bad_inputs(capsys):
    assert json.loads(out_of(capsys, ["moneric", "--builtin", "H"], 2).err)["error"] == "usage"
    out_of(capsys, ["moneric", "--inline", "1,2;3"], 2)
    # p123 vanishes: first three columns equal
    flat = "1,1,1,1,0,0; 0,0,0,0,1,0; 1,1,1,0,0,1"
    res = out_of(capsys, ["naruki-eq", "--inline", flat, "--other-builtin", "G"], 1)
    assert json.loads(res.err)["error"] == "domain"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coxtrop", "trop", "--builtin", "G"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0 and G_TUPLE in proc.stdout
