import io
import json
import subprocess
import sys

import pytest

from amsemigroup.cli import execute
from amsemigroup.report import dumps


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = execute(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()


def run_json(*argv):
    status, out, _ = run(*argv, "--json")
    return status, json.loads(out), out


REPORT_FIELDS = {
    "degree", "sequence", "e", "nratio", "g1", "g2", "g3", "conductor_oracle",
    "conductor_formula", "delta", "gamma", "bound", "extremal",
}
CLASSIFY_FIELDS = {"chain", "generators", "minimal_system", "epsilon", "am21_case", "nprime", "am11_ok"}


class TestCheck:
    def test_remark_text(self):
        status, out, _ = run("check", "--degree", "6", "2", "17")
        assert status == 0
        assert "sequence bbar = (6, 2, 17)" in out
        assert "conductor     = 16 (oracle), 16 (formula)" in out
        assert "gamma         = 4" in out
        assert "extremal      = no" in out

    def test_remark_json(self):
        status, r, _ = run_json("check", "--degree", "6", "2", "17")
        assert status == 0
        assert REPORT_FIELDS <= r.keys()
        assert r["sequence"] == [6, 2, 17]
        assert r["e"] == [6, 2, 1] and r["nratio"] == [3, 2]
        assert r["delta"] == [6, 4, 1] and r["gamma"] == 4 and r["bound"] == 20
        assert r["is_am"] and r["delta_membership"] == [True, False]
        assert r["g3"] is True and r["g3_literal"] is False

    def test_literal_flag(self):
        status, r, _ = run_json("check", "--g3-literal", "--degree", "6", "2", "17")
        assert status == 0 and r["g3_mode"] == "literal" and r["is_am"] is False

    def test_global_flag_position(self):
        status, r, _ = run_json("--g3-literal", "check", "--degree", "6", "2", "17")
        assert r["g3_mode"] == "literal"

    def test_literal_undefined(self):
        status, out, err = run("check", "--g3-literal", "--degree", "6", "5", "6", "--json")
        r = json.loads(out)
        assert r["g3_literal"] is None and not r["is_am"]
        assert "h = 1" in err

    def test_not_am(self):
        status, r, _ = run_json("check", "--degree", "4", "4", "6", "7")
        assert status == 0
        assert r["sequence"] == [4, 6, 7] and not r["g2"] and r["delta"] is None
        assert r["conductor_formula"] is None and r["conductor_oracle"] == 10


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["check", "--degree", "4", "4", "6"],          # gcd 2
            ["check", "--degree", "1", "1"],               # degree too small
            ["check", "--degree", "3", "2", "5"],          # 3 not a member
            ["check", "--degree", "6", "0", "5"],
            ["chains", "1"],
            ["chains", "x"],
            ["chains", str(2**32)],                        # n^2 overflows
            ["classify", "100000"],                        # table guard
            ["bogus"],
            [],
        ],
    )
    def test_exit_two(self, argv):
        assert run(*argv)[0] == 2


def test_chains():
    status, r, _ = run_json("chains", "12")
    assert status == 0 and r["count"] == 8 and r["chains"][0] == [12, 1]
    status, out, _ = run("chains", "6")
    assert out.splitlines() == ["(6, 1)", "(6, 2, 1)", "(6, 3, 1)", "count a(6) = 3"]


def test_classify():
    status, r, _ = run_json("classify", "6")
    assert status == 0 and r["ok"]
    recs = r["records"]
    assert [x["chain"] for x in recs] == [[6, 1], [6, 2, 1], [6, 3, 1]]
    assert [x["am21_case"] for x in recs] == ["n_equals_beta1", "n_equals_beta1", "n_equals_2beta0"]
    assert all(x["am11_ok"] for x in recs)
    assert all(REPORT_FIELDS | CLASSIFY_FIELDS <= x.keys() for x in recs)
    assert recs[1]["am21_printed_generators"] == [4, 6, 16]


def test_enumerate():
    status, r, _ = run_json("enumerate", "4")
    assert status == 0 and r["count"] == 4
    assert [x["sequence"] for x in r["sequences"]] == [[4, 1], [4, 2, 5], [4, 2, 7], [4, 3]]
    assert [x["conductor_oracle"] for x in r["sequences"]] == [0, 4, 6, 6]


def test_enumerate_literal_shows_violations():
    status, out, _ = run("enumerate", "6", "--g3-literal")
    assert status == 0
    assert "(6, 3, 17)  c=32" in out and "above bound" in out


@pytest.mark.parametrize("n", ["2", "6"])
def test_verify(n):
    status, r, _ = run_json("verify", "--max-degree", n)
    assert status == 0 and r["ok"] and r["counterexample"] is None


def test_verify_parallel_matches_serial():
    _, a, _ = run_json("verify", "--max-degree", "14", "--jobs", "1")
    _, b, _ = run_json("verify", "--max-degree", "14", "--jobs", "3")
    assert a == b


def test_verify_failure_exit(monkeypatch):
    import amsemigroup.verify as verify

    monkeypatch.setattr(verify, "two_generator_suite",
                        lambda limit: [{"clause": "injected", "a": 2, "b": 3}])
    status, r, _ = run_json("verify", "--max-degree", "3")
    assert status == 1
    assert r["counterexample"] == {"clause": "injected", "a": 2, "b": 3}


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--degree", "6", "2", "17"],
        ["chains", "24"],
        ["classify", "12"],
        ["enumerate", "8"],
        ["verify", "--max-degree", "8"],
    ],
)
def test_json_round_trip(argv):
    _, parsed, raw = run_json(*argv)
    assert dumps(parsed) == raw
    assert not _has_float(parsed)


def _has_float(obj):
    if isinstance(obj, float):
        return True
    if isinstance(obj, dict):
        return any(_has_float(v) for v in obj.values())
    if isinstance(obj, list):
        return any(_has_float(v) for v in obj)
    return False


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "amsemigroup", "chains", "7"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.startswith("(7, 1)")
