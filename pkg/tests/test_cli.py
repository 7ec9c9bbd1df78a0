import pytest

from hwproj.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_project_float(capsys):
    code, out, _ = run(capsys, "project", "--target", "pp", "1", "1", "1")
    assert code == 0
    assert [float(t) for t in out.split()] == pytest.approx([2 / 3] * 3)


def test_project_l1_negative_values(capsys):
    code, out, _ = run(capsys, "project", "--target", "l1", "--", "-2", "0")
    assert code == 0 and [float(t) for t in out.split()] == [-1.0, 0.0]


def test_project_fixed(capsys):
    code, out, _ = run(capsys, "project", "--format", "s1.6", "0.9", "0.1", "0.05")
    assert code == 0
    assert [float(t) for t in out.split()] == [0.640625, 0.34375, 0.296875]


def test_project_file(tmp_path, capsys):
    p = tmp_path / "v.txt"
    p.write_text("0 0 0\n2 0 0\n")
    code, out, _ = run(capsys, "project", "--target", "simplex", "--file", str(p))
    rows = [[float(t) for t in ln.split()] for ln in out.splitlines()]
    assert code == 0 and rows[1] == [1.0, 0.0, 0.0]


def test_project_bad_format_exit_code(capsys):
    code, _, err = run(capsys, "project", "--format", "q1.6", "0.1", "0.2")
    assert code == 2 and "error" in err


def test_project_needs_values():
    with pytest.raises(SystemExit):
        main(["project"])


def test_sweep_precision_to_file(tmp_path, capsys):
    out = tmp_path / "p.csv"
    code, _, _ = run(capsys, "sweep-precision", "--trials", "200", "--formats", "s0.*",
                     "--widths", "4-6", "--out", str(out))
    lines = out.read_text().splitlines()
    assert code == 0
    assert lines[0].startswith("# schema=hwproj-precision/1")
    assert len(lines) == 2 + 6


def test_sweep_precision_gaussian_stdout(capsys):
    code, out, _ = run(capsys, "sweep-precision", "--dist", "gaussian", "--dim", "9", "--trials", "100",
                       "--formats", "s3.12", "--output-integer-bits", "1")
    assert code == 0 and "variance=16.0" in out and "s1.14" in out


def test_sweep_precision_bad_variance(capsys):
    code, _, err = run(capsys, "sweep-precision", "--dist", "gaussian", "--variance", "0", "--trials", "10")
    assert code == 2 and "variance" in err


def test_sweep_scaling(capsys):
    code, out, _ = run(capsys, "sweep-scaling", "--dims", "2-4,8", "--mode", "sort")
    assert code == 0 and len(out.splitlines()) == 2 + 4


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "200")
    assert code == 0 and out.strip().endswith("ALL PASS")
