import io
import subprocess
import sys

import numpy as np
import pytest

from ndscape import __version__
from ndscape.cli import main
from ndscape.core import distribution_stats
from ndscape.formats import dumps_ndl, read_csv_rows, read_distribution, read_ndl, read_xndl

from .strategies import flat


@pytest.fixture
def target(tmp_path):
    path = tmp_path / "w23.csv"
    assert main(["window", "--p", "2", "--w", "3", "--n", "8", "--out", str(path)]) == 0
    return path


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_is_byte_identical(tmp_path, target):
    a, b = tmp_path / "a.ndl", tmp_path / "b.ndl"
    for out in (a, b):
        assert main(["gen", "--n", "8", "--target", str(target), "--seed", "7",
                     "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert read_ndl(a).n_bits == 8


def test_gen_side_outputs(tmp_path, target):
    log, trace = tmp_path / "log.csv", tmp_path / "trace.csv"
    assert main(["gen", "--n", "8", "--target", str(target), "--seed", "3", "--out",
                 str(tmp_path / "x.ndl"), "--log", str(log), "--trace", str(trace)]) == 0
    first = log.read_text().splitlines()[0]
    assert first.startswith(f"# ndscape {__version__} seed=3 cmd=gen ")
    header, rows = read_csv_rows(log)
    assert header == ["genotype", "position", "sampled_degree"]
    assert sorted(int(r[1]) for _, r in rows) == list(range(256))
    header, rows = read_csv_rows(trace)
    assert header == ["move", "energy"]


def test_analyze_flat_degrees(tmp_path, capsys):
    path = tmp_path / "flat.ndl"
    path.write_text(dumps_ndl(flat(4)))
    code, out, _ = run(["analyze", "--report", "degrees", "--in", str(path)], capsys)
    assert code == 0
    assert out.startswith("# ndscape ")
    np.testing.assert_array_equal(read_distribution(io.StringIO(out)), [0, 0, 0, 0, 1])


def test_royal_road_pipe():
    proc = subprocess.run(
        f"{sys.executable} -m ndscape.cli ref --family royal-road --n 16 --blocks 4 | "
        f"{sys.executable} -m ndscape.cli analyze --report degrees",
        shell=True, capture_output=True, text=True, check=True,
    )
    mean, std = distribution_stats(read_distribution(io.StringIO(proc.stdout)))
    assert (round(mean, 2), round(std, 2)) == (14.0, 2.0)


def test_trap_and_reports(tmp_path, target, capsys):
    land, trapped = tmp_path / "l.ndl", tmp_path / "t.ndl"
    nets = tmp_path / "nets.csv"
    main(["gen", "--n", "8", "--target", str(target), "--seed", "1", "--out", str(land)])
    capsys.readouterr()
    assert main(["trap", "--in", str(land), "--b", "0.25", "--r", "0.9", "--seed", "2",
                 "--out", str(trapped), "--networks-csv", str(nets)]) == 0
    assert read_ndl(trapped).fitness[0] == 1.0
    header, rows = read_csv_rows(nets)
    assert header == ["network", "size", "distance", "fitness"]
    assert sum(int(r[1]) for _, r in rows) == 256

    code, out, _ = run(["analyze", "--report", "fdc", "--in", str(trapped)], capsys)
    header, rows = read_csv_rows(io.StringIO(out))
    assert header == ["fdc", "classification", "m", "optima"]
    assert rows[0][1][2] == "256"

    code, out, _ = run(["analyze", "--report", "ranks", "--in", str(trapped)], capsys)
    _, rows = read_csv_rows(io.StringIO(out))
    assert sum(int(r[1]) for _, r in rows) == 256

    code, out, _ = run(["analyze", "--report", "scatter", "--in", str(trapped),
                        "--sample", "10", "--seed", "4"], capsys)
    _, rows = read_csv_rows(io.StringIO(out))
    assert len(rows) == 10

    code, out, _ = run(["ga", "--in", str(trapped), str(trapped), "--runs", "10",
                        "--trap", "deceptive"], capsys)
    header, rows = read_csv_rows(io.StringIO(out))
    assert header == ["landscape", "mean_degree", "trap", "success_rate", "ci_half_width"]
    assert len(rows) == 2 and rows[0][1][2] == "deceptive"


def test_extend_and_convolve(tmp_path, target, capsys):
    a = tmp_path / "a.ndl"
    a.write_text(dumps_ndl(flat(3)))
    x = tmp_path / "x.xndl"
    assert main(["extend", str(a), str(a), "--out", str(x)]) == 0
    assert read_xndl(x).n_bits == 6
    code, out, _ = run(["convolve", str(target), str(target)], capsys)
    assert code == 0
    assert distribution_stats(read_distribution(io.StringIO(out)))[0] == pytest.approx(6.0)


def test_analyze_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(dumps_ndl(flat(3))))
    code, out, _ = run(["analyze", "--report", "ranks"], capsys)
    assert code == 0
    assert "1,8" in out


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["gen", "--n", "4"], ["window", "--p", "1"], ["ref", "--family", "nk", "--n", "8"],
     ["gen", "--n", "4", "--window", "0", "2", "--seed", "-1"]],
)
def test_usage_errors_exit_1(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 1
    assert err


def test_missing_file_exits_2(tmp_path, capsys):
    code, _, err = run(["analyze", "--report", "fdc", "--in", str(tmp_path / "nope.ndl")], capsys)
    assert code == 2
    assert "nope.ndl" in err


def test_malformed_file_names_line(tmp_path, capsys):
    bad = tmp_path / "bad.ndl"
    bad.write_text("NDL 1 2\n0.1\n0.2\noops\n0.3\n")
    code, _, err = run(["analyze", "--report", "degrees", "--in", str(bad)], capsys)
    assert code == 2
    assert "bad.ndl:4" in err


def test_contract_violation_exits_3(tmp_path, capsys):
    assert run(["window", "--p", "7", "--w", "4", "--n", "8"], capsys)[0] == 3
    path = tmp_path / "flat.ndl"
    path.write_text(dumps_ndl(flat(4)))
    assert run(["analyze", "--report", "fdc", "--in", str(path)], capsys)[0] == 3


def test_target_length_mismatch_exits_3(target, capsys):
    code, _, err = run(["gen", "--n", "6", "--target", str(target)], capsys)
    assert code == 3
    assert "N=6" in err
