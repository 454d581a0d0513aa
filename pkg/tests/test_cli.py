import json

import pytest

from torhom.cli import main
from torhom.links import TorusLinkSpec, torus_link_homology
from torhom.recursion import MemoTable
from torhom.ring import render


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, _ = run(capsys, argv + ["--format", "json"])
    assert code == 0
    return json.loads(out)


class TestExitCodes:
    def test_domain_error(self, capsys):
        assert run(capsys, ["torus", "0", "5"])[0] == 2

    def test_weight_mismatch(self, capsys):
        assert run(capsys, ["pair", "11", "1"])[0] == 2

    def test_bad_bits(self, capsys):
        assert run(capsys, ["pair", "012", "01"])[0] == 2

    def test_sigma_out_of_range(self, capsys):
        assert run(capsys, ["sigma", "2", "3"])[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, ["frobnicate"])[0] == 2

    def test_check_pass(self, capsys):
        code, out, _ = run(capsys, ["check", "unknot-family"])
        assert code == 0
        assert "checks passed" in out

    def test_check_flags(self, capsys):
        assert run(capsys, ["check", "lemma53", "--r", "1", "--len", "2"])[0] == 0


class TestTorus:
    def test_human_output(self, capsys):
        code, out, err = run(capsys, ["torus", "1", "1"])
        assert code == 0
        assert "T(1,1) = (1 + a) / ((1-q))" in out
        assert "memo entries:" in err

    def test_json_matches_library(self, capsys):
        data = run_json(capsys, ["torus", "2", "3"])
        want = json.loads(render(torus_link_homology(TorusLinkSpec(2, 3)), "json"))
        assert data["command"] == "torus"
        assert data["params"] == {"m": 2, "n": 3, "normalized": False}
        assert data["result"] == want
        assert {"seconds", "entries", "hits", "misses", "max_depth"} <= set(data["timing"])

    def test_json_deterministic_minus_timing(self, capsys):
        a = run_json(capsys, ["torus", "3", "2"])
        b = run_json(capsys, ["torus", "3", "2"])
        a.pop("timing")
        b.pop("timing")
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)

    def test_normalized(self, capsys):
        data = run_json(capsys, ["torus", "2", "3", "--normalized"])
        plain = run_json(capsys, ["torus", "2", "3"])
        shifted = [[q - 4, a + 1, t + 1, c] for q, a, t, c in plain["result"]["num"]]
        assert data["result"]["num"] == sorted(shifted)

    def test_thread_count_does_not_change_output(self, capsys, monkeypatch):
        monkeypatch.setenv("TLH_THREADS", "1")
        a = run_json(capsys, ["torus", "3", "3"])
        monkeypatch.setenv("TLH_THREADS", "8")
        b = run_json(capsys, ["torus", "3", "3"])
        a.pop("timing")
        b.pop("timing")
        assert a == b

    def test_bad_thread_env(self, capsys, monkeypatch):
        monkeypatch.setenv("TLH_THREADS", "zero")
        assert run(capsys, ["torus", "2", "2"])[0] == 2


class TestPair:
    def test_empty_pair(self, capsys):
        code, out, _ = run(capsys, ["pair", "", ""])
        assert code == 0
        assert "p(empty,empty) = 1" in out

    def test_expand_flag(self, capsys):
        data = run_json(capsys, ["pair", "0", "0", "--expand", "2"])
        assert data["expand_depth"] == 2
        # (1+a)(1 + q + q^2): six terms, no denominator left
        assert len(data["expansion"]["num"]) == 6
        assert data["expansion"]["den"] == []

    def test_latex(self, capsys):
        code, out, _ = run(capsys, ["pair", "0", "0", "--format", "latex"])
        assert code == 0
        assert "\\frac{" in out


class TestColored:
    def test_single_order(self, capsys):
        data = run_json(capsys, ["colored", "1", "1", "2", "--order", "theorem"])
        assert data["params"]["order"] == "theorem"
        assert "orders_match_up_to_monomial" not in data

    def test_both_orders(self, capsys):
        data = run_json(capsys, ["colored", "1", "1", "2"])
        assert "result_example" in data
        assert "orders_match_up_to_monomial" in data

    def test_domain_error(self, capsys):
        assert run(capsys, ["colored", "0", "1", "1"])[0] == 2


class TestSigma:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, ["sigma", "5", "3,0,1,5", "--stats"])
        assert code == 0
        assert "v = 1110" in out
        assert "w = 010000100100" in out
        assert "inv = 2" in out
        assert "c = 7" in out
        assert "rev = 5,1,0,3" in out

    def test_single_zero(self, capsys):
        code, out, _ = run(capsys, ["sigma", "1", "0"])
        assert code == 0
        assert "f(0) = 1 + a" in out

    def test_g_flag(self, capsys):
        data = run_json(capsys, ["sigma", "2", "1,0", "--g"])
        assert data["params"]["g"] is True
        assert data["w"].endswith("0") is False  # w shown without the appended zero


class TestCache:
    def test_cache_round_trip(self, capsys, tmp_path):
        path = str(tmp_path / "memo.tsv")
        a = run_json(capsys, ["torus", "2", "3", "--cache", path])
        assert a["timing"]["entries"] > 0
        b = run_json(capsys, ["torus", "2", "3", "--cache", path])
        assert b["timing"]["hits"] >= 1
        assert a["result"] == b["result"]

    def test_cache_file_has_version_header(self, capsys, tmp_path):
        path = tmp_path / "memo.tsv"
        run_json(capsys, ["pair", "0", "0", "--cache", str(path)])
        header = path.read_text().splitlines()[0]
        assert header == MemoTable._version_line()


class TestCheckFailurePath:
    def test_failing_suite_exits_one(self, capsys, monkeypatch):
        import torhom.checks as checks

        def broken(**_):
            return [("always-broken", False, "forced")]

        monkeypatch.setitem(checks.SUITES, "unknot-family", broken)
        code, out, _ = run(capsys, ["check", "unknot-family"])
        assert code == 1
        assert "[FAIL] always-broken" in out
