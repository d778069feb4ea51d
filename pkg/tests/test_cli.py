import json

from hexmg.cli import decimal_str, main
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decimal_str_round_half_even():
    assert decimal_str(Fraction(2523, 842), 4) == "2.9964"
    assert decimal_str(Fraction(87, 56), 4) == "1.5536"
    assert decimal_str(Fraction(1, 2), 4) == "0.5000"
    assert decimal_str(Fraction(53, 30)) == "1.766667"


def test_region_csv_matches_reference_curves(capsys, tmp_path):
    out = tmp_path / "region.csv"
    code, _, _ = run(
        capsys,
        "region", "--m", "3", "--mu-tx", "0.1", "--mu-rx", "0.2", "--d", "20",
        "--both", "--format", "csv", "--emit", str(out),
    )
    assert code == 0
    text = out.read_text()
    lines = text.strip().splitlines()
    assert lines[0] == "bound,sf,ss"
    inner = [l for l in lines if l.startswith("inner")]
    outer = [l for l in lines if l.startswith("outer")]
    assert "inner,0.000000,1.553571" in inner
    assert "inner,1.479221,0.072727" in inner
    assert "inner,1.500000,0.000000" in inner
    assert "outer,0.000000,1.766667" in outer
    assert "outer,1.500000,0.266667" in outer


def test_region_json_exact_rationals(capsys, tmp_path):
    out = tmp_path / "region.json"
    code, _, _ = run(
        capsys,
        "region", "--m", "3", "--mu-tx", "1/10", "--mu-rx", "1/5", "--d", "20",
        "--inner", "--format", "json", "--emit", str(out),
    )
    assert code == 0
    payload = json.loads(out.read_text())
    vertices = {tuple(map(tuple, (v["sf"], v["ss"]))) for v in payload["bounds"]["inner"]}
    assert ((1139, 770), (4, 55)) in vertices
    assert ((0, 1), (87, 56)) in vertices


def test_region_svg_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for path in (a, b):
        code, _, _ = run(
            capsys,
            "region", "--m", "3", "--d", "20", "--mu-tx", "10", "--mu-rx", "10",
            "--format", "svg", "--samples", "40", "--emit", str(path),
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert "S^(F)" in text and "S^(S)" in text
    assert "<polyline" in text


def test_region_usage_error(capsys):
    code, _, err = run(capsys, "region", "--m", "0", "--d", "20")
    assert code == 2


def test_lattice_emit_sorted_directed_edges(capsys, tmp_path):
    out = tmp_path / "lattice.csv"
    code, stdout, _ = run(capsys, "lattice", "--radius", "2", "--m", "1", "--emit", str(out))
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == (
        "sector_cell_q,sector_cell_r,orientation,neighbor_cell_q,"
        "neighbor_cell_r,neighbor_orientation"
    )
    rows = lines[1:]
    assert rows == sorted(rows)
    # directed: each undirected pair appears twice
    assert len(rows) % 2 == 0


def test_cluster_check_counts(capsys, tmp_path):
    out = tmp_path / "roles.csv"
    code, stdout, _ = run(
        capsys,
        "cluster", "--radius", "12", "--t", "2", "--mode", "mixed",
        "--check-counts", "--emit", str(out),
    )
    assert code == 0
    assert "tx links 144" in stdout
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "cell_q,cell_r,orientation,role,cluster_id"
    roles = {line.split(",")[3] for line in lines[1:]}
    assert roles == {"FAST", "SLOW", "SILENT", "MASTER"}


def test_zf_command(capsys, tmp_path):
    out = tmp_path / "zf.csv"
    code, stdout, _ = run(
        capsys,
        "zf", "--t", "1", "--m", "1", "--trials", "5", "--seed", "3",
        "--tol", "1e-9", "--emit", str(out),
    )
    assert code == 0
    assert "PASS" in stdout
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "trial,solvable,max_cross_residual,min_self_rank"
    assert len(lines) == 6


def test_converse_census(capsys, tmp_path):
    out = tmp_path / "census.csv"
    code, stdout, _ = run(
        capsys,
        "converse", "--radius", "30", "--d", "3", "--check-fractions",
        "--emit", str(out),
    )
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "color,count,fraction,limit,abs_error"
    assert {l.split(",")[0] for l in lines[1:]} == {"RED", "BLUE", "PINK", "WHITE"}


def test_schedule_command_valid_and_invalid(capsys):
    code, stdout, _ = run(capsys, "schedule", "--algorithm", "1", "--dt", "10", "--dr", "10", "--validate")
    assert code == 0
    assert "VALID" in stdout
    code, stdout, _ = run(
        capsys, "schedule", "--algorithm", "2", "--dt", "3", "--dr", "3", "--d", "4", "--validate"
    )
    assert code == 1
    assert "INVALID" in stdout


def test_config_file_defaults_and_override(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("radius = 12\nt = 2\nmode = mixed\n")
    code, stdout, _ = run(capsys, "cluster", "--config", str(cfg), "--check-counts")
    assert code == 0
    assert "t=2" in stdout
    # explicit flag wins over config value
    code, stdout, _ = run(capsys, "cluster", "--config", str(cfg), "--t", "1", "--check-counts")
    assert code == 0
    assert "tx links 36" in stdout


def test_unknown_command(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_zf_command_alternate_schemes(capsys):
    for scheme in ("s3", "s5"):
        code, stdout, _ = run(
            capsys, "zf", "--t", "1", "--m", "1", "--trials", "3", "--scheme", scheme
        )
        assert code == 0
        assert "PASS" in stdout
