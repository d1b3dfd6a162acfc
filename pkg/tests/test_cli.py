import json

import pytest

from collapsing.cli import main
from collapsing.words import W, W0, W3


@pytest.fixture
def counterexample(tmp_path):
    path = tmp_path / "ce.json"
    path.write_text('{"n": 5, "a": [0, 3, 4, 2, 1], "b": [3, 0, 0, 1, 4]}')
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify(capsys, counterexample):
    code, out, _ = run(capsys, "classify", counterexample)
    data = json.loads(out)
    assert code == 0 and data["family"] == "(3,p)" and data["verdict"] == "Proper"


def test_compress(capsys, counterexample, tmp_path):
    code, out, _ = run(capsys, "compress", counterexample, "--k", "3")
    assert code == 0 and json.loads(out)["length"] == 7
    ident = tmp_path / "id.json"
    ident.write_text('{"n": 3, "a": [0, 1, 2], "b": [0, 1, 2]}')
    code, out, _ = run(capsys, "compress", str(ident), "--k", "2")
    assert code == 0 and json.loads(out)["status"] == "NotCompressible"


def test_msa_dot(capsys, counterexample):
    code, out, _ = run(capsys, "msa-dot", counterexample, "--m", "2")
    assert code == 0 and out.startswith("digraph MSA")


def test_certificate(capsys):
    code, out, _ = run(capsys, "certificate", "--word", W3)
    assert code == 0 and json.loads(out)["is_certified"]
    code, _, _ = run(capsys, "certificate", "--word", "ab")
    assert code == 1


def test_scs(capsys, tmp_path):
    patterns = tmp_path / "W.txt"
    patterns.write_text("\n".join(W) + "\n")
    code, out, _ = run(capsys, "scs", "--patterns", str(patterns))
    assert code == 0 and json.loads(out)["length"] == 55
    reduced = tmp_path / "W0.txt"
    reduced.write_text("\n".join(W0))
    code, out, _ = run(capsys, "scs", "--patterns", str(reduced), "--constraint", "L", "--constraint", "L-dual")
    data = json.loads(out)
    assert code == 0 and data["length"] == 53 and W3 in data["words"]
    small = tmp_path / "small.txt"
    small.write_text("ab\nba\n")
    code, out, _ = run(capsys, "scs", "--patterns", str(small), "--constraint", "aa")
    assert code == 1 and "no optimal word" in json.loads(out)["error"]


def test_verification_commands(capsys):
    code, out, _ = run(capsys, "verify-word", "--word", "abbabaaabbaabababbaabbbabaabaabba", "--n", "4", "--k", "3")
    assert code == 0 and json.loads(out)["mismatch_count"] == 0
    code, out, _ = run(capsys, "verify-characterization", "--n", "4", "--family", "(3,p)")
    assert code == 0 and json.loads(out)["families"] == ["(3,p)"]


@pytest.mark.parametrize("argv", [
    ["certificate", "--word", "abc"],
    ["compress", "missing.json", "--k", "2"],
    ["verify-word", "--word", "ab", "--n", "4", "--k", "4"],
    ["verify-characterization", "--n", "3"],
    ["verify-characterization", "--n", "4", "--family", "(7,p)"],
    ["sweep5", "--threads", "0"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_bad_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "a": [0, 5], "b": [0, 1]}')
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 2 and "bad automaton" in err


def test_argparse_usage(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_words_dump(capsys):
    code, out, _ = run(capsys, "words")
    assert code == 0 and json.loads(out)["w3"] == W3
