import json
import sys
from pathlib import Path

import pytest

from cobarlab.chains import Chain
from cobarlab.cli import main
from cobarlab.engine import engine_for
from cobarlab.literals import (LiteralError, parse_cobar, parse_simplex, parse_word, phi_table,
                               print_chain)
from cobarlab.loop_group import Word, inv
from cobarlab.simplicial import Simplex, model, to_json

GOLDEN = Path(__file__).parent / "golden"
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "scripts"))
from make_golden import GOLDEN_MODELS  # noqa: E402


def test_parse_simplex():
    X = model("deltabar2")
    e = Simplex(X.cell_named("01"))
    assert parse_simplex(X, "01") == e
    assert parse_simplex(X, "(s1 01)") == X.degeneracy(e, 1)
    assert parse_simplex(X, "s0 s0 01") == parse_simplex(X, "s1 s0 01")
    for bad in ("", "s9 01", "x1 01", "nope"):
        with pytest.raises(LiteralError):
            parse_simplex(X, bad)


def test_parse_word():
    X = model("deltabar2")
    G = engine_for(X).G
    x = Simplex(X.cell_named("012"))
    assert parse_word(X, "t(012)^-1") == inv(G.tau(x))
    assert parse_word(X, "[t(012) * t(012)^-1]") == Word(1)
    assert parse_word(X, "1", degree=2) == Word(2)
    assert str(parse_word(X, "t(012)^-1 * t(s1 12)")) == "[t(012)^-1 * t(s1 12)]"
    for bad in ("1", "t(01) * t(012)", "tau(012)"):
        with pytest.raises(LiteralError):
            parse_word(X, bad)
    with pytest.raises(LiteralError):
        parse_word(X, "t(012)", degree=2)


def test_parse_cobar():
    X = model("deltabar2")
    O = engine_for(X).cobar
    assert parse_cobar(O, "[]") == O.unit()
    assert parse_cobar(O, "[inv 01 | s-1 01]") == O.unit() - O.bar(Simplex(X.cell_named("01")))
    with pytest.raises(LiteralError):
        parse_cobar(O, "[s-1 *]")
    with pytest.raises(LiteralError):
        parse_cobar(O, "[inv 012]")


def test_printing():
    X = model("deltabar2")
    E = engine_for(X)
    assert print_chain(Chain(3)) == "0"
    x = Simplex(X.cell_named("012"))
    assert print_chain(E.psi(E.G.chain(inv(E.G.tau(x))))) == "+1·[s-1 012 | inv 12]"
    e = Simplex(X.cell_named("01"))
    assert print_chain(E.phi(E.cobar.susp(e))) == "-1·[] +1·[t(01)^-1]"
    assert print_chain(E.phi(E.cobar.susp(e)), long=True) == "-1·[]\n+1·[t(01)^-1]"


@pytest.mark.parametrize("name", GOLDEN_MODELS)
def test_golden_phi_tables(name):
    expected = (GOLDEN / f"phi_{name}.txt").read_text(encoding="utf-8")
    assert phi_table(model(name)) == expected
    assert phi_table(model(name)) == phi_table(model(name))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_commands(capsys):
    assert run(capsys, "model", "--model", "deltabar2")[0] == 0
    code, out, _ = run(capsys, "phi", "--model", "deltabar2", "[s-1 01]")
    assert (code, out.strip()) == (0, "-1·[] +1·[t(01)^-1]")
    code, out, _ = run(capsys, "psi", "--model", "deltabar2", "t(012)^-1")
    assert (code, out.strip()) == (0, "+1·[s-1 012 | inv 12]")
    code, out, _ = run(capsys, "homotopy", "--model", "sphere2", "--word", "t(sigma)")
    assert code == 0 and out.strip().endswith("residual: 0")
    code, out, _ = run(capsys, "homology", "--model", "sphere2", "--max-degree", "3", "--format", "json")
    assert code == 0 and [g["betti"] for g in json.loads(out)["groups"]] == [1, 1, 1, 1]


def test_cli_input_errors(capsys, tmp_path):
    assert run(capsys, "psi", "--model", "deltabar2", "t(zzz)")[0] == 2
    assert run(capsys, "verify", "--model", "delta2", "--suite", "twisting")[0] == 2
    assert run(capsys, "model", "--model", "nosuchmodel")[0] == 2
    assert run(capsys, "homology", "--model", "deltabar2")[0] == 2
    bad = tmp_path / "bad.json"
    data = to_json(model("delta2"))
    data["simplices"]["2"][0]["faces"][0] = {"op": "", "base": "01"}
    bad.write_text(json.dumps(data))
    assert run(capsys, "model", "--model", str(bad))[0] == 2
    (tmp_path / "junk.json").write_text("{not json")
    assert run(capsys, "model", "--model", str(tmp_path / "junk.json"))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_cli_model_file(capsys, tmp_path):
    path = tmp_path / "s3.json"
    path.write_text(json.dumps(to_json(model("sphere3"))))
    code, out, _ = run(capsys, "homology", "--model", str(path), "--max-degree", "4")
    assert code == 0 and out.split("\n")[:5] == ["H_0 = Z", "H_1 = 0", "H_2 = Z", "H_3 = 0", "H_4 = Z"]


def test_cli_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--model", "sphere2", "--suite", "cobar", "--format", "json",
                       "--seed", "7", "--samples", "10")
    reports = json.loads(out)
    assert code == 0 and reports[0]["seed"] == 7 and reports[0]["ok"]
