import json
import subprocess
import sys
from pathlib import Path

DATA = Path(__file__).parent / "data"


def run_cli(*args: str, env: dict | None = None) -> subprocess.CompletedProcess:
    cmd = [sys.executable, "-m", "hamrel", *args]
    return subprocess.run(cmd, capture_output=True, text=True, env=env)


def test_help():
    cp = run_cli("--help")
    assert cp.returncode == 0, cp.stderr
    assert "approximate" in cp.stdout and "error-bound" in cp.stdout


def test_exact_table(tmp_path):
    out = tmp_path / "vec.json"
    cp = run_cli("exact", "--l", "5", "--w", "3", "-o", str(out))
    assert cp.returncode == 0, cp.stderr
    for value in ("21", "194", "782", "1772", "2443", "2114", "1187", "439"):
        assert value in cp.stdout
    doc = json.loads(out.read_text())
    assert doc["kind"] == "exact" and doc["n"] == 15
    assert doc["coeffs"][5] == "21" and doc["coeffs"][12] == "439"


def test_exact_csv_output(tmp_path):
    out = tmp_path / "vec.csv"
    cp = run_cli("exact", "--l", "2", "--w", "2", "-o", str(out), "--format", "csv")
    assert cp.returncode == 0, cp.stderr
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "k,N_k,C_n_k"
    assert len(lines) == 6


def test_exact_graph_file():
    cp = run_cli("exact", "--graph", str(DATA / "series2.txt"))
    assert cp.returncode == 0, cp.stderr
    rows = [line.split() for line in cp.stdout.splitlines()[2:]]
    assert [r[1] for r in rows] == ["0", "0", "1"]


def test_exact_cap_exceeded():
    cp = run_cli("exact", "--l", "6", "--w", "6")
    assert cp.returncode == 1
    assert cp.stderr.startswith("error: cap-exceeded:")


def test_exact_missing_graph_file():
    cp = run_cli("exact", "--graph", "no-such-file.txt")
    assert cp.returncode == 1
    assert "error:" in cp.stderr


def test_approximate_auto_anchors(tmp_path):
    out = tmp_path / "fit.json"
    cp = run_cli(
        "approximate", "--l", "5", "--w", "3", "--s", "1", "--t", "1",
        "--auto-anchors", "-o", str(out),
    )
    assert cp.returncode == 0, cp.stderr
    for value in ("561", "982", "1320", "1434"):
        assert value in cp.stdout
    doc = json.loads(out.read_text())
    assert set(doc) == {"f_lw", "f_wl", "model"}
    assert doc["f_lw"]["kind"] == "approx"
    assert doc["model"]["mode"] == "unique"
    assert doc["model"]["derived"]["n_nw"] == 439


def test_approximate_explicit_anchors_match_auto(tmp_path):
    out_a = tmp_path / "auto.json"
    out_b = tmp_path / "explicit.json"
    cp = run_cli("approximate", "--l", "5", "--w", "3", "--auto-anchors", "-o", str(out_a))
    assert cp.returncode == 0, cp.stderr
    cp = run_cli(
        "approximate", "--l", "5", "--w", "3",
        "--anchors", "21", "194", "16", "178", "-o", str(out_b),
    )
    assert cp.returncode == 0, cp.stderr
    assert out_a.read_bytes() == out_b.read_bytes()


def test_approximate_golden_5x5_improvement_variant(tmp_path):
    # recorded golden output of the wide-offset fit; identical config must
    # reproduce it byte for byte
    out = tmp_path / "fit.json"
    cp = run_cli(
        "approximate", "--l", "5", "--w", "5", "--s", "9", "--t", "1",
        "--auto-anchors", "-o", str(out),
    )
    assert cp.returncode == 0, cp.stderr
    assert out.read_bytes() == (DATA / "golden_5x5_s9_t1.json").read_bytes()


def test_approximate_anchors_file(tmp_path):
    out = tmp_path / "fit.json"
    cp = run_cli(
        "approximate", "--l", "5", "--w", "3",
        "--anchors-file", str(DATA / "anchors_5x3.json"), "-o", str(out),
    )
    assert cp.returncode == 0, cp.stderr
    doc = json.loads(out.read_text())
    assert doc["model"]["anchors"]["n_l"] == 21


def test_anchors_file_via_fixture_dir(tmp_path):
    import os

    env = dict(os.environ)
    env["HAMREL_FIXTURE_DIR"] = str(DATA)
    cp = run_cli(
        "approximate", "--l", "5", "--w", "3",
        "--anchors-file", "anchors_5x3.json", env=env,
    )
    assert cp.returncode == 0, cp.stderr


def test_anchors_file_dims_mismatch():
    cp = run_cli(
        "approximate", "--l", "5", "--w", "5",
        "--anchors-file", str(DATA / "anchors_5x3.json"),
    )
    assert cp.returncode == 1
    assert cp.stderr.startswith("error: inconsistent-anchors:")


def test_approximate_requires_anchor_source():
    cp = run_cli("approximate", "--l", "5", "--w", "3")
    assert cp.returncode == 1
    assert cp.stderr.startswith("error: inconsistent-anchors:")


def test_approximate_degenerate_dims():
    cp = run_cli("approximate", "--l", "2", "--w", "2", "--anchors", "1", "2", "1", "2")
    assert cp.returncode == 1
    assert cp.stderr.startswith("error: degenerate-dims:")


def test_bounds_auto(tmp_path):
    out = tmp_path / "bounds.json"
    cp = run_cli("bounds", "--l", "5", "--w", "3", "--auto-anchors", "-o", str(out))
    assert cp.returncode == 0, cp.stderr
    assert "5596" in cp.stdout and "249" in cp.stdout
    doc = json.loads(out.read_text())
    assert doc["lb"]["coeffs"][7] == "249"
    assert doc["ub"]["coeffs"][7] == "5596"


def test_bounds_anchors_file():
    cp = run_cli(
        "bounds", "--l", "5", "--w", "3",
        "--anchors-file", str(DATA / "anchors_5x3.json"),
    )
    assert cp.returncode == 0, cp.stderr
    assert "2611" in cp.stdout


def test_bounds_explicit_anchors_csv(tmp_path):
    out = tmp_path / "bounds.csv"
    cp = run_cli(
        "bounds", "--l", "5", "--w", "3", "--anchors", "21", "194", "1187", "439",
        "-o", str(out), "--format", "csv",
    )
    assert cp.returncode == 0, cp.stderr
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "k,lb,ub"
    assert lines[8] == "7,249,5596"


def test_error_bound(tmp_path):
    out = tmp_path / "eb.json"
    cp = run_cli("error-bound", "--l", "5", "--w", "3", "-o", str(out))
    assert cp.returncode == 0, cp.stderr
    assert "5.07399" in cp.stdout
    assert "73039787676416" in cp.stdout
    doc = json.loads(out.read_text())
    assert doc["big_m"] == "73039787676416"


def test_compare_report(tmp_path):
    out = tmp_path / "curves.csv"
    cp = run_cli(
        "compare", "--l", "5", "--w", "3", "--grid", "101", "-o", str(out),
    )
    assert cp.returncode == 0, cp.stderr
    assert "max |h - h_fit|" in cp.stdout
    assert "within bounds: yes" in cp.stdout
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "p,h_exact,h_approx,h_dual_approx,lb,ub"
    assert len(lines) == 102
    first = lines[1].split(",")
    assert first[0] == "0" and float(first[1]) == 0.0
    last = lines[-1].split(",")
    assert float(last[1]) == 1.0


def test_compare_exact_file(tmp_path):
    out = tmp_path / "curves.csv"
    cp = run_cli(
        "compare", "--l", "5", "--w", "3", "--grid", "11",
        "--exact-file", str(DATA / "hammock_5x3_exact.json"), "-o", str(out),
    )
    assert cp.returncode == 0, cp.stderr
    assert out.exists()


def test_compare_anchors_file(tmp_path):
    out = tmp_path / "curves.csv"
    cp = run_cli(
        "compare", "--l", "5", "--w", "3", "--grid", "11",
        "--anchors-file", str(DATA / "anchors_5x3.json"), "-o", str(out),
    )
    assert cp.returncode == 0, cp.stderr
    assert "within bounds: yes" in cp.stdout
    assert out.exists()


def test_approximate_general_mode():
    cp = run_cli(
        "approximate", "--l", "5", "--w", "3", "--s", "2", "--t", "1",
        "--mode", "general", "--x1", "7",
        "--anchors", "21", "194", "16", "889",
    )
    assert cp.returncode == 0, cp.stderr
    assert "mode=general" in cp.stdout


def test_approximate_general_bad_bridge_point():
    cp = run_cli(
        "approximate", "--l", "5", "--w", "3", "--s", "2", "--t", "1",
        "--mode", "general", "--x1", "99",
        "--anchors", "21", "194", "16", "889",
    )
    assert cp.returncode == 1
    assert cp.stderr.startswith("error: invalid-bridge-point:")


def test_compare_plot(tmp_path):
    out = tmp_path / "curves.csv"
    cp = run_cli(
        "compare", "--l", "5", "--w", "3", "--grid", "21",
        "-o", str(out), "--plot",
    )
    assert cp.returncode == 0, cp.stderr
    png = out.with_suffix(".png")
    assert png.exists()
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_curves_stdout():
    cp = run_cli("curves", "--l", "5", "--w", "3", "--auto-anchors", "--grid", "5")
    assert cp.returncode == 0, cp.stderr
    lines = cp.stdout.strip().splitlines()
    assert lines[0] == "p,h_exact,h_approx,h_dual_approx,lb,ub"
    assert len(lines) == 6


def test_curves_coeff_fn(tmp_path):
    out = tmp_path / "coeffs.csv"
    png = tmp_path / "coeffs.png"
    cp = run_cli(
        "curves", "--l", "5", "--w", "3", "--auto-anchors", "--coeff-fn",
        "-o", str(out), "--plot", str(png),
    )
    assert cp.returncode == 0, cp.stderr
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "x,coeff_exact,coeff_fit"
    assert len(lines) == 17  # integers 0..15
    row7 = lines[8].split(",")
    assert row7[0] == "7" and row7[1] == "782"
    assert float(row7[2]) == 560.7142857142857
    assert png.exists()


def test_curves_coeff_fn_float_grid(tmp_path):
    out = tmp_path / "coeffs.csv"
    cp = run_cli(
        "curves", "--l", "5", "--w", "3", "--auto-anchors", "--coeff-fn",
        "--grid", "31", "-o", str(out),
    )
    assert cp.returncode == 0, cp.stderr
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 32
    assert float(lines[-1].split(",")[0]) == 15.0


def test_curves_grid_too_small():
    cp = run_cli("curves", "--l", "5", "--w", "3", "--auto-anchors", "--grid", "1")
    assert cp.returncode == 1
    assert cp.stderr.startswith("error: domain-error:")
    cp = run_cli("curves", "--l", "5", "--w", "3", "--auto-anchors",
                 "--coeff-fn", "--grid", "1")
    assert cp.returncode == 1
    assert cp.stderr.startswith("error: domain-error:")


def test_plot_without_out_fails():
    cp = run_cli("curves", "--l", "5", "--w", "3", "--auto-anchors", "--plot")
    assert cp.returncode == 1
    assert cp.stderr.startswith("error: domain-error:")
