import io
import json

import pytest

from ferrers.cli import ORACLES, render_json, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_examples():
    assert call("trees", "--partition", "4,4,2")[:2] == (0, "96\n")
    assert call("excedance", "--word", "ba")[:2] == (0, "3\n")
    code, _, err = call("hamiltonian", "--partition", "4,4,2")
    assert code == 3 and "n = m" in err


def test_chromatic_eval_and_polynomial():
    assert call("chromatic", "--word", "ba", "--eval", "3")[1] == "18\n"
    assert call("chromatic", "--partition", "1")[1] == "t^2 - t\n"


def test_csf_bases():
    assert call("csf", "--partition", "1")[1] == "p[1,1] - p[2]\n"
    code, text, _ = call("csf", "--partition", "2,2", "--specialize", "1,1,1")
    assert (code, text) == (0, "18\n")
    code, text, _ = call("csf", "--partition", "1", "--basis", "m", "--specialize", "1,1")
    assert (code, text) == (0, "2\n")
    assert call("csf", "--partition", "2,1", "--basis", "m")[0] == 3


def test_weighted_trees():
    code, text, _ = call("weighted-trees", "--partition", "2,2", "--x", "1,2", "--y", "1,3")
    assert (code, text) == (0, "72\n")
    assert call("weighted-trees", "--partition", "2,2", "--x", "1", "--y", "1,3")[0] == 3


CASES = [
    ["info"], ["trees"], ["weighted-trees", "--x", "1/2,3,2", "--y", "1,2,5"],
    ["vertebrates"], ["rooks"], ["chromatic"], ["chromatic", "--eval", "4"],
    ["excedance"], ["csf"], ["csf", "--specialize", "1,2"],
] + [["oracle", name] for name in ORACLES if name not in ("weighted-trees", "chromatic-value", "csf")] + [
    ["oracle", "weighted-trees", "--x", "1/2,3,2", "--y", "1,2,5"],
    ["oracle", "chromatic-value", "--t", "3"],
    ["oracle", "csf", "--values", "1,1,2"],
    ["oracle", "acyclic-sink", "--sink", "v2"],
    ["oracle", "coloring-corollary", "--row", "2"],
]


@pytest.mark.parametrize("argv", CASES, ids=lambda a: "-".join(a[:2]))
@pytest.mark.parametrize("fmt", ["text", "json"])
def test_partition_and_word_agree(argv, fmt):
    a = call(*argv, "--partition", "3,2,2", "--format", fmt)
    b = call(*argv, "--word", "baab", "--format", fmt)
    assert a[0] == 0, a[2]
    assert a == b
    if fmt == "json":
        assert render_json(json.loads(a[1])) + "\n" == a[1]


def test_json_square_only_commands():
    for argv in (["hamiltonian"], ["oracle", "hamiltonian"], ["oracle", "bijections"],
                 ["csf", "--basis", "m"]):
        a = call(*argv, "--partition", "2,2", "--format", "json")
        b = call(*argv, "--word", "ba", "--format", "json")
        assert a == b and a[0] == 0
        payload = json.loads(a[1])
        assert payload["partition"] == [2, 2] and payload["word"] == "ba"
        assert render_json(payload) + "\n" == a[1]


def test_json_integers_are_strings():
    payload = json.loads(call("vertebrates", "--partition", "4,4,2", "--format", "json")[1])
    assert payload["value"] == "1152"
    chi = json.loads(call("chromatic", "--word", "ba", "--format", "json")[1])
    assert chi["coefficients"] == ["0", "-3", "6", "-4", "1"]


@pytest.mark.parametrize("argv", [
    [],
    ["trees"],
    ["trees", "--partition", "2,2", "--word", "ba"],
    ["trees", "--partition", "2,3"],
    ["trees", "--word", "abc"],
    ["chromatic", "--word", "ba", "--eval", "x"],
    ["oracle", "nope", "--word", "ba"],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err


def test_parse_error_names_position():
    assert "part 1 (4)" in call("trees", "--partition", "3,4")[2]
    assert "letter 2" in call("trees", "--word", "abx")[2]


def test_resource_errors(monkeypatch):
    assert call("csf", "--partition", "3,3", "--box-limit", "4")[0] == 4
    assert call("oracle", "spanning-trees", "--partition", "4,4,4,4")[0] == 4
    monkeypatch.setenv("FERRERS_MAX_BOXES", "2")
    code, _, err = call("csf", "--partition", "2,2")
    assert code == 4 and "2^4" in err


def test_domain_errors():
    assert call("oracle", "chromatic-value", "--word", "ba")[0] == 3
    assert call("oracle", "acyclic-sink", "--word", "ba", "--sink", "v9")[0] == 3


def test_selftest():
    code, out, _ = call("selftest")
    assert code == 0
    assert out.count("[PASS]") == 10
    code, out, _ = call("selftest", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and all(c["passed"] for c in payload["criteria"])
