import subprocess
import sys

import pytest

from tatami.cli import main
from tatami.ksum import count_ksum
from tatami.square import count_vd
from tatami.strip import count_strip


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, lines",
    [
        (["subsets", "4", "3"], ["3", "1 2"]),
        (["subsets", "5", "0"], ["-"]),
        (["square", "8", "7", "--count"], ["24"]),
        (["strip", "3", "1", "--count"], ["10 2 12"]),
        (["strip", "3", "0", "--count"], ["1 1 2"]),
        (["oracle", "rect", "10", "13", "--monominoes", "0"], ["total 0"]),
        (["oracle", "rect", "2", "2", "--monominoes", "2", "--top-corners"], ["0 1", "total 1"]),
    ],
)
def test_examples(capsys, argv, lines):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.splitlines() == lines


def test_square_listing(capsys):
    code, out, _ = run(capsys, "square", "8", "7")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 24 and lines[0] == "{6*}{1}{}"


def test_oracle_square_histogram(capsys):
    code, out, _ = run(capsys, "oracle", "square", "8", "7")
    assert code == 0
    assert "7 24" in out.splitlines()
    assert out.splitlines()[-1] == "total 256"


def test_oracle_square_tiles_filtered(capsys):
    code, out, _ = run(capsys, "oracle", "square", "6", "3", "--tiles")
    assert code == 0
    assert out.count("grid 6 6") == count_vd(6, 3) == 6


@pytest.mark.parametrize(
    "argv, code",
    [
        (["subsets", "-1", "0"], 2),
        (["subsets", "x", "0"], 2),
        (["square", "7", "3", "--render=ascii"], 2),
        (["square", "1", "0"], 2),
        (["strip", "1", "1"], 2),
        (["bench", "nope"], 2),
        (["oracle", "rect", "3", "3", "--monominoes", "0"], 2),
        (["oracle", "square", "13"], 3),
        (["oracle", "rect", "12", "13"], 3),
        ([], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == ""
    assert err


@pytest.mark.parametrize(
    "enum_argv, count_argv",
    [
        (["subsets", "12", "20"], ["subsets", "12", "20", "--count"]),
        (["square", "10", "9"], ["square", "10", "9", "--count"]),
        (["square", "9", "6"], ["square", "9", "6", "--count"]),
    ],
)
def test_count_matches_line_count(capsys, enum_argv, count_argv):
    _, listing, _ = run(capsys, *enum_argv)
    _, count, _ = run(capsys, *count_argv)
    assert int(count) == len(listing.splitlines())


def test_strip_count_matches_listing(capsys):
    _, listing, _ = run(capsys, "strip", "3", "2")
    _, count, _ = run(capsys, "strip", "3", "2", "--count")
    assert int(count.split()[2]) == len(listing.splitlines())


@pytest.mark.parametrize("render", ["ascii", "svg", "tiles"])
def test_renders_are_separated(capsys, render):
    _, out, _ = run(capsys, "square", "6", "4", f"--render={render}")
    blocks = out.split("\n\n")
    _, count, _ = run(capsys, "square", "6", "4", "--count")
    assert len(blocks) == int(count)


def test_strip_schematic(capsys):
    code, out, _ = run(capsys, "strip", "2", "0", "--render", "schematic")
    assert code == 0
    assert out == "|||\n|||\n\n===\n===\n"


def test_deterministic(capsys):
    first = run(capsys, "square", "10", "12")
    second = run(capsys, "square", "10", "12")
    assert first == second


def test_bench_subsets(capsys):
    code, out, _ = run(capsys, "bench", "subsets", "--n", "20", "--k", "30")
    assert code == 0
    fields = dict(part.split("=", 1) for part in out.split())
    assert int(fields["outputs"]) == count_ksum(20, 30)
    assert float(fields["ratio_float"]) < 10


def test_bench_strip_outputs_match_recurrence(capsys):
    code, out, _ = run(capsys, "bench", "strip", "--r", "4", "--n", "6")
    fields = dict(part.split("=", 1) for part in out.split())
    assert int(fields["outputs"]) == count_strip(4, 6)[2]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tatami", "subsets", "4", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "3\n1 2\n"
