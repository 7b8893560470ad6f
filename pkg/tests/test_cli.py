import json

import pytest

from dominocells.cli import run
from dominocells.signed_perm import enumerate_group

from conftest import EX_T


def call(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rs_example(capsys):
    code, out, _ = call(capsys, "rs", "--rank", "2", "--word", "4,-3,-2,1")
    assert code == 0
    data = json.loads(out)
    want = {str(k): v for k, v in EX_T.items()}
    for side in ("left", "right"):
        got = {str(d["label"]): [tuple(c) for c in d["cells"]] for d in data[side]["dominoes"]}
        assert got == want


def test_rs_empty_word(capsys):
    code, out, _ = call(capsys, "rs", "--rank", "0", "--word", "")
    assert code == 0
    assert json.loads(out) == {"left": {"rank": 0, "dominoes": []}, "right": {"rank": 0, "dominoes": []}}


def test_rs_inverse_round_trip_is_byte_exact(capsys, monkeypatch):
    for r in range(3):
        for w in enumerate_group(3):
            _, pair_json, _ = call(capsys, "rs", "--rank", str(r), f"--word={w}")
            code, out, _ = call(capsys, "inverse-rs", stdin=pair_json, monkeypatch=monkeypatch)
            assert code == 0 and out == f"{w}\n"


def test_ops_list_and_apply(capsys):
    code, out, _ = call(capsys, "ops", "-r", "2", "-w", "4,-3,-2,1", "--format", "ascii")
    assert out.split() == ["Knuth(1)", "InSwap(1)", "InSwap(3)", "SignChange(3)"]
    code, out, _ = call(capsys, "ops", "-r", "2", "-w", "4,-3,-2,1", "--apply", "SignChange(3)", "--check-tableau")
    assert code == 0
    assert json.loads(out)["image"] == "-4,-3,-2,1"
    assert json.loads(out)["tableau_check"] == "PASS"


def test_domain_error_exit_code(capsys):
    code, _, err = call(capsys, "ops", "-w", "1,2", "--apply", "InSwap(1)")
    assert code == 1 and "not applicable" in err
    code, _, _ = call(capsys, "rs", "-w", "1,1")
    assert code == 1


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        run(["rs", "--rank", "-1", "-w", "1"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        run(["rs"])
    assert exc.value.code == 64


def test_verify_exit_codes(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "generation", "--n", "3", "--rank", "0")
    assert code == 0
    assert out.startswith("PASS generation n=3 rank=0")


def test_cycles_mt_special_render(capsys):
    code, out, _ = call(capsys, "cycles", "-r", "2", "-w", "4,-3,-2,1", "--side", "right")
    records = json.loads(out)["cycles"]
    assert {"labels": [4], "kind": "open-noncore", "back": [2, 4], "front": [3, 3], "boxed": True} in records
    code, out, _ = call(capsys, "mt", "-r", "2", "-w", "4,-3,-2,1", "-k", "4", "--side", "right", "--extended")
    data = json.loads(out)
    assert data["moved"] == {"left": [4], "right": [4]}
    code, out, _ = call(capsys, "special", "-r", "2", "-w", "4,-3,1,-2")
    assert {"label": 4, "cells": [[2, 3], [2, 4]]} in json.loads(out)["dominoes"]
    code, out, _ = call(capsys, "render", "-r", "2", "-w", "4,-3,-2,1", "--side", "left")
    assert out.splitlines()[1] == "| · | · | 1     |"
    code, _, _ = call(capsys, "mt", "-r", "2", "-w", "4,-3,-2,1", "-k", "1")
    assert code == 1


def test_cells_and_graph(capsys, tmp_path):
    code, out, _ = call(capsys, "cells", "--n", "1", "--kind", "irreducible")
    assert json.loads(out)["blocks"] == [["-1"], ["1"]]
    target = tmp_path / "g.dot"
    code, out, _ = call(capsys, "graph", "--n", "2", "--dot", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("graph ")
