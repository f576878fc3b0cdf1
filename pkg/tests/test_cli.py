import json

import pytest

from sl4kostant.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_partition(capsys):
    assert run(capsys, "partition", "1", "2", "2") == (0, "q^2 + 3q^3 + 2q^4 + q^5\n", "")
    assert run(capsys, "partition", "0", "0", "0")[1] == "1\n"
    assert run(capsys, "partition", "1", "2", "2", "--q1")[1] == "7\n"
    for engine in ("closed", "sum", "enum"):
        assert run(capsys, "partition", "2", "3", "1", "--oracle", engine)[1] == \
            run(capsys, "partition", "2", "3", "1")[1]
    assert run(capsys, "partition", "-1", "2", "2")[1] == "0\n"


def test_mult(capsys):
    code, out, _ = run(capsys, "mult", "1", "3", "0", "1", "1", "0")
    assert code == 0
    assert out.splitlines() == ["q^2 + q^3 + q^4", "case: Z1 - Z3", "A = {1, s3}"]
    assert run(capsys, "mult", "0", "0", "0", "0", "0", "0")[1].splitlines()[0] == "1"
    assert run(capsys, "mult", "1", "0", "1", "0", "0", "0", "--q1")[1].splitlines()[0] == "3"
    assert run(capsys, "mult", "1", "0", "0", "0", "1", "0")[1].splitlines()[:2] == ["0", "case: 0"]


def test_mult_dominance(capsys):
    code, _, err = run(capsys, "mult", "-1", "0", "0", "0", "0", "0")
    assert code == 3 and "not dominant" in err
    code, out, _ = run(capsys, "mult", "-1", "0", "0", "0", "0", "0", "--direct")
    assert code == 0 and "case" not in out


def test_altset_and_classify(capsys):
    assert run(capsys, "altset", "1", "0", "1", "0", "0", "0")[1] == "{1, s2}\n"
    assert run(capsys, "altset", "1", "0", "1", "0", "0", "0", "--method", "bruteforce")[1] == "{1, s2}\n"
    assert run(capsys, "classify", "1", "1", "1")[1] == "A2 = {1, s2}\n"
    assert run(capsys, "classify", "2", "1", "1")[0] == 3


def test_usage_errors(capsys):
    assert run(capsys, "partition", "x", "1", "1")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "diagram", "--x", "1-2")[0] == 2
    assert run(capsys, "diagram", "--format", "svg")[0] == 2
    assert run(capsys, "bench", "--engines", "fast")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--x", "0:0", "--y", "0:0", "--z", "0:0",
                       "--mu", "0,0,0", "--threads", "1")
    assert code == 0 and out.splitlines()[:2] == ["distinct sets: 1", "max cardinality: 1"]
    code, out, _ = run(capsys, "enumerate", "--x", "-3:3", "--y", "-3:3", "--z", "-3:3",
                       "--mu-max", "1", "--format", "json", "--threads", "2")
    obj = json.loads(out)
    assert obj["distinct"] == len(obj["registry"])


def test_diagram_formats(tmp_path, capsys):
    args = ["diagram", "--x", "-2:2", "--y", "-2:2", "--z", "0:0", "--mu", "0,0,0"]
    code, out, _ = run(capsys, *args, "--format", "json")
    obj = json.loads(out)
    assert code == 0 and len(obj["points"]) == 25
    assert set(obj) == {"mu", "registry", "points"}
    code, out, _ = run(capsys, *args, "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "x,y,z,set_id" and len(lines) == 26
    assert run(capsys, *args, "--format", "csv")[1] == out
    code, out, _ = run(capsys, *args)
    assert out.startswith("25 points")


def test_diagram_svg_slices(tmp_path, capsys):
    outdir = tmp_path / "slices"
    code, _, _ = run(capsys, "diagram", "--x", "-25:25", "--y", "-25:25", "--z", "-5:5",
                     "--mu", "0,0,0", "--format", "svg", "--output", str(outdir))
    assert code == 0
    files = sorted(p.name for p in outdir.iterdir())
    assert len(files) == 11 and "diagram_z-5.svg" in files
    first = (outdir / "diagram_z0.svg").read_text()
    run(capsys, "diagram", "--x", "-25:25", "--y", "-25:25", "--z", "-5:5",
        "--mu", "0,0,0", "--format", "svg", "--output", str(outdir))
    assert (outdir / "diagram_z0.svg").read_text() == first


def test_empty_region(tmp_path, capsys):
    target = tmp_path / "cube.csv"
    code, _, _ = run(capsys, "empty-region", "--mu", "0,2,0", "--x", "-10:10", "--y", "-10:10",
                     "--z", "-10:10", "--format", "csv", "--output", str(target))
    lines = target.read_text().splitlines()
    assert code == 0 and lines[0] == "x,y,z" and len(lines) > 1
    code, out, _ = run(capsys, "empty-region", "--mu", "0,2,0", "--format", "json")
    assert len(json.loads(out)["points"]) == len(lines) - 1
    code, _, _ = run(capsys, "empty-region", "--z", "0:1", "--format", "svg",
                     "--output", str(tmp_path / "e"))
    assert code == 0 and len(list((tmp_path / "e").iterdir())) == 2


def test_empty_window_writes_empty_file(tmp_path, capsys):
    target = tmp_path / "none.json"
    code, _, _ = run(capsys, "diagram", "--x", "3:1", "--format", "json", "--output", str(target))
    assert code == 0 and target.read_text() == ""
    target = tmp_path / "none.csv"
    code, _, _ = run(capsys, "empty-region", "--y", "1:0", "--format", "csv", "--output", str(target))
    assert code == 0 and target.read_text() == ""


def test_unwritable_output(capsys, tmp_path):
    bad = tmp_path / "missing" / "out.csv"
    assert run(capsys, "diagram", "--format", "csv", "--output", str(bad))[0] == 4


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "partition", "--max", "0")
    assert code == 0 and out == "partition: 1/1 triples agree\n"
    code, out, _ = run(capsys, "verify", "--suite", "mult", "--max", "2")
    assert code == 0 and out.startswith("mult: ")


def test_bench_single_point(capsys):
    code, out, _ = run(capsys, "bench", "--range", "5:6", "--engines", "closed,sum,enum")
    assert code == 0 and "1 evaluations per engine" in out


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "sl4kostant", "partition", "1", "1", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "q^1 + 2q^2 + q^3\n"
