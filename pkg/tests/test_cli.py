from __future__ import annotations

import csv
import io
import json

import pytest

from fglcalc import __version__
from fglcalc.cli import main
from fglcalc.sequences import GENF1, SEQUENCE_B1

JSON_KEYS = {"command", "params", "results", "verdicts", "version"}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    assert set(doc) == JSON_KEYS and doc["version"] == __version__
    return code, doc


def run_csv(capsys, *argv):
    """Rows of the first CSV block (a verdict table may follow a blank line)."""
    code, out, _ = run(capsys, *argv, "--format", "csv")
    return code, list(csv.reader(io.StringIO(out.split("\n\n")[0])))


@pytest.fixture
def chi4_file(tmp_path):
    path = tmp_path / "chi4.json"
    path.write_text(json.dumps({"modulus": 4, "order": 2, "values": [0, None, 1, "0"]}))
    return str(path)


# --- fgl -------------------------------------------------------------------------


def test_fgl_show_classical(capsys):
    code, doc = run_json(capsys, "fgl", "show", "--group", "classical", "--order", "6")
    assert code == 0
    assert doc["results"][0]["gamma"] == ["1", "1", "1/2", "1/6", "1/24", "1/120"]
    assert doc["results"][0]["law"] == "s1 + s2 + s1*s2"


def test_fgl_show_csv_header(capsys):
    code, rows = run_csv(capsys, "fgl", "show", "--group", "classical", "--order", "4")
    assert rows[0] == ["i", "c", "gamma"]
    assert rows[3] == ["2", "1", "1/2"]


def test_fgl_axioms_negative_clist(capsys):
    code, doc = run_json(capsys, "fgl", "axioms", "--clist", "-1,1,-1,1", "--order", "6")
    assert code == 0
    assert [v["status"] for v in doc["verdicts"]] == ["holds"] * 3


def test_fgl_show_tanh(capsys):
    code, doc = run_json(capsys, "fgl", "show", "--exp", "tanh(t)", "--order", "8")
    assert doc["results"][0]["c"][:7] == ["1", "0", "1", "0", "1", "0", "1"]


# --- bernoulli ------------------------------------------------------------------------


def test_universal_table(capsys):
    code, rows = run_csv(capsys, "bernoulli", "poly", "--universal", "--n", "5")
    assert code == 0 and rows[0] == ["n", "value"] and len(rows) == 7
    assert rows[3] == ["2", "x^2 + x*c1 - 1/2*c1^2 + 2/3*c2"]


def test_genus_s_todd(capsys):
    code, rows = run_csv(capsys, "bernoulli", "genus", "--kind", "s", "--char", "t/(1-exp(-t))", "--n", "2")
    assert rows[1:] == [["1", "1/2"], ["2", "1/12"]]


def test_l_group_polys(capsys):
    code, rows = run_csv(capsys, "bernoulli", "poly", "--group", "L", "--n", "2")
    assert rows[-1] == ["2", "x^2 + 2/3"]


def test_classical_numbers(capsys):
    code, rows = run_csv(capsys, "bernoulli", "numbers", "--group", "classical", "--n", "4")
    assert [r[1] for r in rows[1:]] == ["1", "-1/2", "1/6", "0", "-1/30"]


# --- congruence -------------------------------------------------------------------------


def test_am_classical_all_hold(capsys):
    code, doc = run_json(
        capsys, "congruence", "am", "--group", "classical", "--n-max", "16", "--h-max", "10", "--k-max", "10"
    )
    assert code == 0
    assert len(doc["verdicts"]) == 17 * 100
    assert all(v["holds"] for v in doc["verdicts"])


def test_staudt(capsys):
    code, doc = run_json(capsys, "congruence", "staudt", "--n-max", "14")
    assert code == 0 and len(doc["verdicts"]) == 15


def test_failing_clist_exits_2_with_witness(capsys):
    code, rows = run_csv(
        capsys, "congruence", "am", "--clist", "1/2", "--n-max", "2", "--h-max", "1", "--k-max", "1",
        "--ignore-hypotheses", "--stop-on-first-failure",
    )
    assert code == 2
    assert rows[0] == ["name", "params", "status", "holds", "witness"]
    assert rows[-1][2:] == ["fails", "false", "1/2"]


def test_unmet_hypotheses_exit_2(capsys):
    code, rows = run_csv(capsys, "congruence", "am", "--clist", "0,2,0,1", "--n-max", "1", "--h-max", "1", "--k-max", "1")
    assert code == 2
    assert rows[1][2] == "hypotheses unmet" and "c_2 mod 3" in rows[1][4]


def test_granville_kind(capsys):
    code, doc = run_json(capsys, "congruence", "granville", "--kind", "alpha_tilde", "--n-max", "6", "--h-max", "4", "--k-max", "4")
    assert code == 0 and all(v["holds"] for v in doc["verdicts"])


def test_kummer_and_hb(capsys):
    assert run(capsys, "congruence", "kummer", "--n-max", "8")[0] == 0
    assert run(capsys, "congruence", "hb", "--n-max", "10")[0] == 0


# --- sequences ---------------------------------------------------------------------------


def test_sequence_a(capsys):
    code, rows = run_csv(capsys, "sequence", "numbers", "--g1", "L", "--g2", "todd", "--count", "10")
    assert rows[0] == ["k", "value"]
    assert [int(r[1]) for r in rows[1:]] == [-1, 1, 0, -1, 0, 3, 0, -17, 0, 155]


def test_sequence_b1(capsys):
    code, rows = run_csv(capsys, "sequence", "numbers", "--expr", SEQUENCE_B1, "--count", "6")
    assert code == 0
    assert [int(r[1]) for r in rows[1:]] == [2, 6, 39, 324, 3365, 41958]


def test_sequence_polys_genf1(capsys):
    code, rows = run_csv(capsys, "sequence", "polys", "--expr", GENF1, "--n-max", "4")
    assert rows[0] == ["j", "k", "value"]
    assert rows[1] == ["0", "1", "-5"]
    assert rows[2] == ["1", "2", "-10*x + 29"]


# --- zeta -----------------------------------------------------------------------------------


def test_zeta_value(capsys):
    code, doc = run_json(capsys, "zeta", "value", "--group", "classical", "--m", "1", "--a", "1")
    assert code == 0 and doc["results"][0]["value"] == "-1/12"


def test_zeta_th3(capsys):
    code, out, _ = run(capsys, "zeta", "th3", "--group", "classical", "--n", "3", "--h", "1", "--k", "2")
    assert code == 0 and "holds" in out


def test_zeta_th4(capsys, chi4_file):
    code, doc = run_json(capsys, "zeta", "th4", "--group", "classical", "--char", chi4_file, "--n", "3")
    assert code == 0 and doc["verdicts"][0]["status"] == "holds"


def test_zeta_l_value(capsys, chi4_file):
    code, rows = run_csv(capsys, "zeta", "l", "--group", "hurwitz", "--char", chi4_file, "--n", "1")
    assert rows[1] == ["1", "1/2"]


# --- errors and determinism -------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["fgl", "show", "--group", "nope"],
        ["fgl", "show", "--group", "classical", "--clist", "1"],
        ["fgl", "show"],
        ["fgl", "show", "--exp", "2*t"],
        ["fgl", "show", "--exp", "t+"],
        ["bernoulli", "poly", "--group", "classical", "--n", "5", "--order", "2"],
        ["zeta", "th4", "--group", "classical", "--char", "/nonexistent.json", "--n", "3"],
        ["nosuch"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_output_file_is_deterministic(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        argv = ["congruence", "br", "--group", "todd", "--n-max", "6", "--k-max", "4", "--format", "json", "--output", str(path)]
        assert main(argv) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert capsys.readouterr().out == ""
