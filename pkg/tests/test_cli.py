import json
import subprocess
import sys

import pytest

from conftest import DATA
from richardson.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    payload = json.loads(out)
    assert payload["schema"] == 1
    return code, payload


def test_construct_renders_the_worked_example(capsys):
    code, out, _ = run(capsys, "construct", "--kind", "orth", "--dimvec", "3,4,2,4,3", "--render", "text")
    assert code == 0
    assert out == (DATA / "golden" / "orth_3-4-2-4-3.txt").read_text()


def test_construct_single_block(capsys):
    code, payload = run_json(capsys, "construct", "--kind", "orth", "--dimvec", "7")
    assert code == 0
    assert payload["x"] == [] and payload["partition"] == [1] * 7


def test_construct_symplectic_example(capsys):
    code, payload = run_json(capsys, "construct", "--kind", "symp", "--dimvec", "5,3,5,0,5,3,5")
    assert code == 0 and payload["ok"]
    assert all(payload["flags"].values())


def test_construct_from_half_vector(capsys):
    code, payload = run_json(capsys, "construct", "--kind", "orth", "--half", "4,3", "--N", "16")
    assert code == 0 and payload["dimvec"]["entries"] == [3, 4, 2, 4, 3]


def test_construct_normalizes_by_default(capsys):
    code, payload = run_json(capsys, "construct", "--kind", "orth", "--dimvec", "1,1,0,1,1")
    assert code == 0
    assert payload["dimvec"]["entries"] == [1, 2, 1] and payload["normalized_from"] == [1, 1, 0, 1, 1]
    code, payload = run_json(capsys, "verify", "--kind", "orth", "--dimvec", "2,0,3,0,2", "--no-normalize")
    assert code == 0 and payload["dimvec"]["entries"] == [2, 0, 3, 0, 2] and "normalized_from" not in payload


def test_verify(capsys):
    code, payload = run_json(capsys, "verify", "--kind", "orth", "--dimvec", "1,2,1")
    assert code == 0
    assert payload["partition"] == [3, 1] and payload["dense"] is True
    code, out, _ = run(capsys, "verify", "--kind", "orth", "--dimvec", "1,2,1", "--format", "text")
    assert "partition: (3,1)" in out and "dense: True" in out


def test_classify(capsys):
    code, payload = run_json(capsys, "classify", "--kind", "orth", "--partition", "3,2,2,1")
    assert code == 0 and payload["polarizable"] is False and payload["witness"] is None
    code, payload = run_json(capsys, "classify", "--kind", "orth", "--partition", "5,5,3,3")
    assert payload["polarizable"] is True
    assert [p for seg in payload["witness"] for p in seg["parts"]] == [5, 5, 3, 3]


def test_crossvalidate(capsys):
    code, out, _ = run(capsys, "crossvalidate", "--kind", "orth", "--N", "12", "--format", "text")
    assert code == 0 and out == "OK: 21 partitions matched\n"
    code, payload = run_json(capsys, "crossvalidate", "--kind", "symp", "--N", "12")
    assert code == 0 and payload["ok"] and payload["missing"] == payload["extra"] == []


def test_enumerate(capsys):
    code, payload = run_json(capsys, "enumerate", "--kind", "orth", "--N", "4")
    assert code == 0
    assert payload["results"] == [{"kind": "orth", "N": 4, "partitions": [[3, 1], [2, 2], [1, 1, 1, 1]]}]
    code, payload = run_json(capsys, "enumerate", "--max-N", "6", "--check", "all")
    assert code == 0 and payload["ok"] and payload["failures"] == []


def test_render_dot(capsys):
    code, out, _ = run(capsys, "render", "--kind", "symp", "--dimvec", "3,4,2,4,3", "--format", "dot")
    assert code == 0 and out == (DATA / "golden" / "symp_3-4-2-4-3.dot").read_text()


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--kind", "symp", "--dimvec", "5,3"],
        ["construct", "--kind", "orth", "--dimvec", "1,2,3"],
        ["construct", "--kind", "orth", "--dimvec", "a,b"],
        ["construct", "--kind", "orth"],
        ["construct", "--kind", "orth", "--dimvec", "1", "--N", "3"],
        ["construct", "--kind", "orth", "--dimvec", "1,0,1", "--no-normalize"],
        ["verify", "--kind", "symp", "--half", "1", "--N", "5"],
        ["classify", "--kind", "orth", "--partition", "2,1"],
        ["crossvalidate", "--kind", "symp", "--N", "5"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--kind", "unitary", "--dimvec", "3"])
    assert exc.value.code == 2


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "richardson", "construct", "--kind", "symp", "--dimvec", "3,1,6,1,1,2,1,1,6,1,3"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert first == second
    assert json.loads(first)["ok"] is True
