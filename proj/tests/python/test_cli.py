import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

CLI = os.environ["CODO_CLI"]
GOLDEN = Path(os.environ["CODO_GOLDEN_DIR"])


def run(*args):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout + proc.stderr


def construct_quartic(tmp_path, **flags):
    l_path = tmp_path / "L.json"
    m_path = tmp_path / "M.json"
    options = {"family": "theorem2", "alpha0": "1", "alpha2": "2", "beta": "3", **flags}
    argv = ["construct"]
    for key, value in options.items():
        argv += [f"--{key}", str(value)]
    argv += ["--out-l", str(l_path), "--out-m", str(m_path)]
    code, out = run(*argv)
    return code, out, l_path, m_path


def test_construct_verify_report_quartic(tmp_path):
    code, out, l_path, m_path = construct_quartic(tmp_path)
    assert code == 0
    assert "order(M) = 4" in out
    assert l_path.exists() and m_path.exists()

    code, out = run("verify", "--l", str(l_path), "--m", str(m_path))
    assert code == 0
    assert "COMMUTE" in out

    code, out = run("report", "--l", str(l_path), "--m", str(m_path))
    assert code == 0
    assert out.startswith("codo report 1\n")
    assert "commute: yes" in out
    assert "relation: " in out
    assert "nonsingular: yes" in out


def test_curve_flags_on_degenerate_pair(tmp_path):
    code, _, l_path, m_path = construct_quartic(tmp_path, alpha0="0", mu1="1", mu2="2")
    assert code == 0
    code, out = run(
        "curve", "--l", str(l_path), "--m", str(m_path), "--degz", "4",
        "--check-reducible", "--check-nonsingular",
    )
    assert code == 0
    assert "reducible: yes" in out
    assert out.count("factor: ") == 2
    assert "nonsingular: no" in out


def test_construct_elliptic_and_verify(tmp_path):
    l_path = tmp_path / "L.json"
    m_path = tmp_path / "M.json"
    code, out = run(
        "construct", "--family", "theorem3", "--g2", "4",
        "--out-l", str(l_path), "--out-m", str(m_path),
    )
    assert code == 0
    assert "certified window" in out

    code, out = run("verify", "--l", str(l_path), "--m", str(m_path))
    assert code == 0
    assert "COMMUTE" in out

    code, out = run("report", "--l", str(l_path), "--m", str(m_path))
    assert code == 0
    assert "ring: laurent" in out
    assert "certified window" in out


def test_construct_rejects_wrong_slope(tmp_path):
    code, out, _, _ = construct_quartic(tmp_path, gamma="2")
    assert code == 1
    assert "error" in out


def test_verify_detects_perturbation(tmp_path):
    doc = json.loads((GOLDEN / "elliptic_M.json").read_text())
    triple = next(
        entry[0]
        for term in doc["terms"]
        for row in term["matrix"]
        for entry in row
        if entry
    )
    triple[1] = str(Fraction(triple[1]) + 1)
    bad = tmp_path / "M.json"
    bad.write_text(json.dumps(doc))

    code, out = run("verify", "--l", str(GOLDEN / "elliptic_L.json"), "--m", str(bad))
    assert code == 1
    assert "NONZERO at (entry " in out


def test_missing_file_is_usage_error():
    code, out = run("verify", "--l", "/nonexistent/L.json", "--m", "/nonexistent/M.json")
    assert code == 2
    assert "cannot open" in out


def test_malformed_document_is_usage_error(tmp_path):
    bad = tmp_path / "doc.json"
    bad.write_text("{}")
    code, _ = run("verify", "--l", str(bad), "--m", str(bad))
    assert code == 2


def test_bad_arguments_are_usage_errors():
    assert run("frobnicate")[0] == 2
    assert run("construct", "--family", "theorem2")[0] == 2
    assert run("curve", "--l", "a.json", "--m", "b.json")[0] == 2
