import dataclasses
import json
import subprocess
import sys

import pytest

from posetcorr import cli
from posetcorr.inequalities import verify_fishburn
from posetcorr.poly import MultiPoly
from posetcorr.poset import from_relations


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_examples(capsys):
    assert run(capsys, "compute", "e", "--poset", "chain:3")[:2] == (0, "1\n")
    assert run(capsys, "compute", "omega", "--poset", "antichain:2", "--t", "1")[:2] == (0, "4\n")
    assert run(capsys, "compute", "e", "--poset", "skew:3,2,1/2,1")[1] == "6\n"
    assert run(capsys, "compute", "omega_q", "--poset", "chain:2", "--t", "1")[1] == "1 + 1 * q^1 + 1 * q^2\n"


def test_compute_schur(capsys):
    code, out, _ = run(capsys, "compute", "schur", "--shape", "2,1", "--vars", "3")
    assert code == 0
    f = MultiPoly.parse(out.strip(), ["z1", "z2", "z3"])
    assert len(list(f.terms())) == 7 and f.sum_coefficients() == 8


def test_compute_from_file(tmp_path, capsys):
    path = tmp_path / "wedge.txt"
    path.write_text("3\n1 3\n2 3\n")
    assert run(capsys, "compute", "e", "--poset", f"file:{path}")[1] == "2\n"
    assert run(capsys, "compute", "maj", "--poset", str(path))[1] == "1 + 1 * q^2\n"


@pytest.mark.parametrize("argv", [
    ["compute", "omega", "--poset", "chain:2"],
    ["compute", "e", "--poset", "tree:3"],
    ["compute", "e", "--poset", "chain:x"],
    ["compute", "schur", "--shape", "1,2", "--vars", "2"],
    ["compute", "kz", "--poset", "chain:2"],
    ["verify", "--theorem", "nosuch"],
])
def test_usage_errors(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("posetcorr:")


def test_argparse_errors_exit_2(capsys):
    for argv in (["verify", "--max-n", "0"], ["compute", "pi"], []):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2


def test_verify_fishburn(capsys):
    code, out, err = run(capsys, "verify", "--theorem", "fishburn", "--max-n", "4")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs and all(r["theorem"] == "fishburn" and r["verdict"] == "holds" for r in recs)
    assert err.startswith(f"fishburn: {len(recs)} instances, {len(recs)} hold, 0 fail")


def test_verify_every_suite(capsys):
    code, out, err = run(capsys, "verify", "--max-n", "3", "--samples", "3")
    assert code == 0
    assert all(json.loads(line)["verdict"] == "holds" for line in out.splitlines())
    assert [line.split(":")[0] for line in err.splitlines()] == list(cli.THEOREMS)


def test_verify_is_deterministic(capsys):
    argv = ["verify", "--seed", "7", "--max-n", "5", "--samples", "5",
            "--theorem", "generalized-fishburn", "--theorem", "op", "--theorem", "ddp"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0
    third = run(capsys, *argv[:2], "8", *argv[3:])
    assert third[1] != first[1]


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.jsonl"
    code, out, _ = run(capsys, "verify", "--theorem", "stanley", "--max-n", "3", "--output", str(path))
    assert code == 0 and out == ""
    assert all(json.loads(line)["verdict"] == "holds" for line in path.read_text().splitlines())


def test_failure_exits_1(monkeypatch, capsys):
    report = verify_fishburn(from_relations(3, [(0, 1), (0, 2)]), [0, 1], [0, 2])
    broken = dataclasses.replace(report, holds=False)
    monkeypatch.setitem(cli.SUITES, "fishburn", lambda cfg: [broken])
    code, out, err = run(capsys, "verify", "--theorem", "fishburn")
    assert code == 1 and "1 fail" in err
    assert json.loads(out)["verdict"] == "fails"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "posetcorr", "compute", "e", "--poset", "antichain:3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "6\n"
