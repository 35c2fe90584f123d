import json
import subprocess
import sys

import pytest

from gradedhecke.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_tableaux_example(capsys):
    code, out, _ = run(["tableaux", "--n", "2", "--e", "2", "--multicharge", "0"], capsys)
    assert code == 0
    data = json.loads(out)
    assert len(data["shapes"]) == 2
    assert [s["tableaux"][0]["degree"] for s in data["shapes"]] == [1, 0]


def test_relations_example(capsys):
    code, out, _ = run(["relations", "--n", "3", "--e", "3", "--p", "7", "--q", "2", "--multicharge", "0"], capsys)
    assert code == 0
    assert json.loads(out)["reports"]["relations"]


def test_decomp_example(capsys):
    code, out, _ = run(["decomp", "--n", "2", "--e", "2", "--p", "5", "--q", "4", "--multicharge", "0"], capsys)
    assert code == 0
    (block,) = json.loads(out)["blocks"]
    assert block["entries"] == [["t"], ["1"]]
    assert block["cartan"] == [["t^2+1"]]


@pytest.mark.parametrize("argv", [
    ["gdim", "--n", "3", "--census"],
    ["blocks", "--n", "3", "--multicharge", "0,1"],
    ["idempotents", "--n", "3", "--multicharge", "0,1"],
    ["basis", "--n", "3", "--basis", "psi-prime"],
    ["gram", "--n", "3", "--e", "3"],
    ["pairing", "--n", "2", "--multicharge", "0,1"],
    ["appendix-z", "--n", "3", "--e", "3", "--multicharge", "0,1"],
    ["zlambda", "--n", "3", "--e", "0", "--rational"],
    ["tableaux", "--n", "3", "--e", "3", "--degenerate"],
    ["idempotents", "--n", "3", "--e", "3", "--degenerate"],
])
def test_subcommands_pass(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 0, err
    json.loads(out)


@pytest.mark.parametrize("argv", [
    ["decomp", "--n", "2", "--e", "2", "--q", "3"],
    ["tableaux", "--n", "2", "--e", "7"],
    ["gram", "--n", "2", "--shape", "2,1"],
    ["relations", "--n", "6", "--max-dim", "100"],
    ["tableaux", "--n", "2", "--format", "xml"],
    ["gram", "--n", "3", "--e", "3", "--degenerate"],
])
def test_invalid_config_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    if err.strip().startswith("{"):
        assert json.loads(err.strip().splitlines()[-1])["error"] == "invalid-config"


def test_theorem_failure_exit_1(capsys, monkeypatch):
    from gradedhecke import klr

    monkeypatch.setattr(klr.KLRGenerators, "verify_theorem_A5", lambda self, s, eps: (None, False))
    code, _, err = run(["appendix-z", "--n", "2"], capsys)
    assert code == 1
    diag = json.loads(err.strip().splitlines()[-1])
    assert diag["error"] == "theorem-violation"
    assert diag["failed"][0]["check"].startswith("z = C e(i) y^d")


def test_formats_carry_the_same_numbers(capsys):
    base = ["decomp", "--n", "3", "--e", "2"]
    _, js, _ = run(base, capsys)
    _, cs, _ = run(base + ["--format", "csv"], capsys)
    _, tx, _ = run(base + ["--format", "latex"], capsys)
    for block in json.loads(js)["blocks"]:
        for row in block["entries"]:
            for x in row:
                assert x in cs
                assert (f"${x}$" if "^" in x else x) in tx
    assert r"\begin{tabular}" in tx


def test_deterministic_output(capsys, tmp_path):
    argv = ["pairing", "--n", "3", "--e", "2", "--out", str(tmp_path / "a.json")]
    assert run(argv, capsys)[0] == 0
    argv[-1] = str(tmp_path / "b.json")
    assert run(argv, capsys)[0] == 0
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# run\nn = 3\ne = 3\nformat = csv\n")
    code, out, _ = run(["blocks", "--config", str(cfg)], capsys)
    assert code == 0 and out.startswith("# blocks")
    code, out, _ = run(["blocks", "--config", str(cfg), "--n", "2", "--format", "json"], capsys)
    assert json.loads(out)["config"]["n"] == 2
    cfg.write_text("colour = blue\n")
    assert run(["blocks", "--config", str(cfg)], capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gradedhecke", "blocks", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["blocks"][0]["defect"] == 1
