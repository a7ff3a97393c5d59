import numpy as np
import pytest

from sbpdct.cli import read_signal, run_cli
from sbpdct.image2d import write_pgm
from sbpdct.reference import dct_forward


@pytest.fixture
def signal_file(tmp_path):
    p = tmp_path / "x.txt"
    p.write_text("# ramp\n1\n2\n3\n\n4\n5\n6\n7\n8\n")
    return p


def test_read_signal(signal_file):
    np.testing.assert_array_equal(read_signal(str(signal_file)), np.arange(1.0, 9.0))


def test_transform(signal_file, capsys):
    assert run_cli(["transform", "--in", str(signal_file)]) == 0
    vals = [float(v) for v in capsys.readouterr().out.split()]
    np.testing.assert_allclose(vals, dct_forward(np.arange(1.0, 9.0)).values, atol=1e-9)


@pytest.mark.parametrize("alg", ["naive", "proposed", "loeffler", "arai"])
def test_transform_algorithms(signal_file, capsys, alg):
    assert run_cli(["transform", "--in", str(signal_file), "--algorithm", alg]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 8


def test_transform_scaled(signal_file, capsys):
    assert run_cli(["transform", "--in", str(signal_file), "--scaled"]) == 0
    rows = [list(map(float, line.split())) for line in capsys.readouterr().out.splitlines()]
    got = [v * s for v, s in rows]
    np.testing.assert_allclose(got, dct_forward(np.arange(1.0, 9.0)).values, atol=1e-9)


def test_transform_scenario_mismatch(signal_file, capsys):
    assert run_cli(["transform", "--in", str(signal_file), "--scenario", "ii"]) == 2
    assert "scenario/input mismatch" in capsys.readouterr().err


def test_transform_bad_inputs(tmp_path, capsys):
    short = tmp_path / "s.txt"
    short.write_text("1\n2\n")
    assert run_cli(["transform", "--in", str(short)]) == 2
    bad = tmp_path / "b.txt"
    bad.write_text("1\nabc\n")
    assert run_cli(["transform", "--in", str(bad)]) == 2
    binary = tmp_path / "b.bin"
    binary.write_bytes(b"\xff\xfe\x00\x81")
    assert run_cli(["transform", "--in", str(binary)]) == 2
    assert run_cli(["transform", "--in", str(tmp_path / "missing")]) == 2
    err = capsys.readouterr().err
    assert "line 2" in err and "not a text file" in err


def test_usage_errors(capsys):
    assert run_cli([]) == 2
    assert run_cli(["opcount", "--algorithm", "fft"]) == 2
    assert run_cli(["opcount", "--algorithm", "loeffler", "--scaled"]) == 2


@pytest.mark.parametrize("args, out", [
    (["--algorithm", "proposed", "--scenario", "iv", "--scaled"], "mults=5 adds=19"),
    (["--algorithm", "proposed"], "mults=11 adds=39"),
    (["--algorithm", "loeffler"], "mults=11 adds=29"),
    (["--algorithm", "arai", "--scaled"], "mults=5 adds=29"),
])
def test_opcount(capsys, args, out):
    assert run_cli(["opcount", *args]) == 0
    assert capsys.readouterr().out.strip() == out


def test_table(tmp_path, capsys):
    csv_path = tmp_path / "t.csv"
    assert run_cli(["table", "--csv", str(csv_path)]) == 0
    assert "note:" in capsys.readouterr().out
    assert csv_path.read_text().startswith("algorithm,scenario,")
    assert run_cli(["table", "--format", "csv"]) == 0
    assert capsys.readouterr().out.startswith("algorithm,scenario,")


def test_verify_small(capsys):
    assert run_cli(["verify", "--seed", "3", "--trials", "20"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert out.strip().endswith("0 failed (seed=3)")


def test_transform2d_and_demo(tmp_path, rng, capsys):
    img = rng.integers(0, 256, size=(16, 24)).astype(np.uint8)
    pgm = tmp_path / "in.pgm"
    write_pgm(pgm, img)
    out_csv = tmp_path / "c.csv"
    assert run_cli(["transform2d", "--in", str(pgm), "--out", str(out_csv)]) == 0
    assert len(out_csv.read_text().splitlines()) == 6
    assert "blocks=6" in capsys.readouterr().out
    out_pgm = tmp_path / "out.pgm"
    assert run_cli(["demo-compress", "--in", str(pgm), "--out", str(out_pgm)]) == 0
    assert out_pgm.exists()
    out = capsys.readouterr().out
    rt = float(out.split("roundtrip_psnr_db=")[1].split()[0])
    assert rt >= 100.0
    assert run_cli(["demo-compress", "--qscale", "0"]) == 2


def test_demo_synthetic(capsys):
    assert run_cli(["demo-compress", "--seed", "1"]) == 0
    assert "image=64x64" in capsys.readouterr().out
