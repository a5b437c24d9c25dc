import json
import math
import subprocess
import sys

import pytest

from kernel_entropy import verifier
from kernel_entropy.cli import main
from kernel_entropy.serialization import csv_text, read_csv


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_entropy_bernstein(capsys):
    code, out, err = run(capsys, "entropy", "--family", "bernstein", "--n", "2",
                         "--x-min", "0", "--x-max", "1", "--steps", "5")
    assert code == 0
    header, rows = read_csv(out)
    assert header == ["x", "S", "V", "renyi", "tsallis", "dS", "d2S", "logconv_margin"]
    assert len(rows) == 5 and rows[0][1] == 1
    assert "\r" not in out
    manifest = json.loads(err)
    assert manifest["command"] == "entropy" and manifest["violation_counts"]["unconditional"] == 0


def test_entropy_kantorovich(capsys):
    code, out, _ = run(capsys, "entropy", "--family", "kantorovich", "--n", "1",
                       "--x-min", "0.5", "--x-max", "0.5", "--steps", "1")
    assert code == 0
    _, rows = read_csv(out)
    x, S, V = rows[0][:3]
    assert S == 1 and math.isclose(V, 1 / 12, rel_tol=1e-15)
    assert rows[0][5] is None  # no analytic derivatives for this family


def test_entropy_gauss_weierstrass(capsys):
    code, out, _ = run(capsys, "entropy", "--family", "gauss-weierstrass", "--r", "0.0397887")
    assert code == 0
    _, rows = read_csv(out)
    assert all(abs(r[1] - 1) < 1e-6 for r in rows)


def test_entropy_json_and_sidecar(tmp_path, capsys):
    path = tmp_path / "p.csv"
    assert run(capsys, "entropy", "--family", "szasz", "--n", "3", "--x-max", "2",
               "--output", str(path))[0] == 0
    assert json.loads((tmp_path / "p.csv.manifest.json").read_text())["config"]["n"] == 3
    code, out, _ = run(capsys, "entropy", "--family", "baskakov", "--n", "3", "--c", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["operator"] == "baskakov(n=3,c=2)" and len(doc["points"]) == 11


@pytest.mark.parametrize("argv", [
    ["entropy", "--family", "bernstein"],
    ["entropy"],
    ["entropy", "--family", "bernstein", "--n", "2", "--x-max", "2"],
    ["entropy", "--family", "post-widder", "--n", "2", "--x-min", "0"],
    ["entropy", "--family", "gauss-weierstrass"],
    ["durrmeyer", "--n", "0"],
    ["legendre", "--n", "2", "--t-min", "0.5"],
    ["multivariate", "--n", "2", "--step", "0.3"],
    ["verify", "--suite", "nonexistent-id"],
    ["verify", "--n-min", "5", "--n-max", "2", "--suite", "ineq-2.2"],
    ["bogus"],
])
def test_usage_errors_exit_1(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ineq-2.2", "--n-max", "10")
    doc = json.loads(out)
    assert code == 0 and doc["violations"] == []
    assert set(doc) >= {"manifest", "findings", "violations", "grazing"}
    code, out, _ = run(capsys, "verify", "--suite", "conj-C", "--n-max", "5", "--c", "-1,0,1")
    doc = json.loads(out)
    assert code == 0 and doc["manifest"]["config"]["c"] == [-1.0, 0.0, 1.0]


def test_verify_exit_2_on_violation(capsys, monkeypatch):
    def broken(cfg):
        yield verifier.Sample({"n": 1}, 0.5, -0.25)
    monkeypatch.setitem(verifier.REGISTRY, "ineq-2.2",
                        verifier.Check("ineq-2.2", "forced failure", False, broken))
    code, out, _ = run(capsys, "verify", "--suite", "ineq-2.2")
    assert code == 2
    assert json.loads(out)["violations"][0]["margin"] == -0.25


def test_verify_conditional_never_exit_2(capsys, monkeypatch):
    def broken(cfg):
        yield verifier.Sample({"n": 1}, 0.5, -0.25)
    monkeypatch.setitem(verifier.REGISTRY, "conj-C", verifier.Check("conj-C", "forced", True, broken))
    code, out, _ = run(capsys, "verify", "--suite", "conj-C")
    assert code == 0 and len(json.loads(out)["findings"]) == 1


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "ineq-2.16" in out and "conj-C" in out


def test_durrmeyer(capsys):
    code, out, _ = run(capsys, "durrmeyer", "--n", "1")
    _, rows = read_csv(out)
    assert code == 0 and [r[1] for r in rows] == [pytest.approx(4 / 3), pytest.approx(2 / 3), pytest.approx(4 / 3)]
    assert out.splitlines()[1] == "0,4/3,"
    code, out, _ = run(capsys, "durrmeyer", "--n", "2", "--check-convexity")
    _, rows = read_csv(out)
    assert code == 0 and all(r[2] >= 0 for r in rows[1:-1])


def test_legendre_table(capsys):
    code, out, _ = run(capsys, "legendre", "--n", "3", "--t-min", "1", "--t-max", "2", "--steps", "9")
    header, rows = read_csv(out)
    assert code == 0 and len(rows) == 9
    for name in ("margin_lower", "margin_simple", "margin_refined", "margin_poly_sharp", "margin_poly_simple"):
        i = header.index(name)
        assert all(r[i] >= -1e-12 for r in rows)


def test_legendre_crossover(capsys):
    code, out, _ = run(capsys, "legendre", "--n", "1", "--crossover")
    assert code == 0 and abs(float(out) - 5 / math.sqrt(21)) < 1e-12


def test_multivariate(capsys):
    code, out, _ = run(capsys, "multivariate", "--n", "2", "--step", "0.0625", "--check", "axial")
    assert code == 0 and json.loads(out)["axial"]["violations"] == []
    code, out, _ = run(capsys, "multivariate", "--n", "3", "--step", "0.0625")
    doc = json.loads(out)
    assert code == 0 and doc["equivalence"]["consistent"]
    assert doc["reduction"]["max_rel_error"] <= 1e-12 and doc["product"]["max_rel_error"] <= 1e-12


def test_csv_output_round_trips(capsys):
    _, out, _ = run(capsys, "entropy", "--family", "baskakov", "--n", "7", "--c", "1",
                    "--x-max", "3.7", "--steps", "23")
    header, rows = read_csv(out)
    assert csv_text(header, rows) == out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kernel_entropy", "legendre", "--n", "1", "--crossover"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("1.09108945")
