import pytest

import torhom.recursion as recursion
from torhom.recursion import (
    MemoTable,
    RuleTag,
    classify_rule,
    eval_p,
    eval_p_parallel,
    eval_p_strings,
    memo_stats,
    worker_count,
)
from torhom.ring import DenomVector, GradedSeries, LaurentPoly, qat_monomial, series_equal
from torhom.sequences import SeqPair, pair_validate


def qat(terms):
    return LaurentPoly.from_qat(terms)


ONE_PLUS_A = qat({(0, 0, 0): 1, (0, 1, 0): 1})


def over_one_minus_q(num, mult):
    return GradedSeries(num, DenomVector.from_dict({1: mult}))


class TestClassify:
    CASES = [
        (("", ""), RuleTag.BaseEmptyLeft),
        (("", "000"), RuleTag.BaseEmptyLeft),
        (("00", ""), RuleTag.BaseEmptyRight),
        (("01", "01"), RuleTag.Rule2_bothEndOne),
        (("10", "01"), RuleTag.Rule3_v0w1),
        (("01", "10"), RuleTag.Rule4_v1w0),
        (("010", "100"), RuleTag.Rule5_bothEndZero),
        (("00", "00"), RuleTag.AllZeros),
        (("0", "0"), RuleTag.AllZeros),
    ]

    @pytest.mark.parametrize("pair,tag", CASES)
    def test_dispatch(self, pair, tag):
        assert classify_rule(SeqPair(*pair)) == tag


class TestKnownValues:
    def test_empty_pair(self):
        assert eval_p_strings("", "") == GradedSeries.one()

    def test_base_case(self):
        for n in range(4):
            got = eval_p_strings("", "0" * n)
            num = LaurentPoly.one()
            for _ in range(n):
                num = num * ONE_PLUS_A
            want = over_one_minus_q(num, n) if n else GradedSeries.one()
            assert got == want
            assert eval_p_strings("0" * n, "") == got

    def test_unknot(self):
        assert eval_p_strings("0", "0") == over_one_minus_q(ONE_PLUS_A, 1)

    def test_hopf_link(self):
        # t^-1 (1+a)(q + t + a - qt) / (1-q)^2
        core = qat({(1, 0, 0): 1, (0, 0, 1): 1, (0, 1, 0): 1, (1, 0, 1): -1})
        want = over_one_minus_q(
            (ONE_PLUS_A * core).scale(qat_monomial(0, 0, -1)), 2)
        assert series_equal(eval_p_strings("00", "00"), want)

    def test_trefoil(self):
        # t^-1 (1+a)(q + t + a) / (1-q)
        core = qat({(1, 0, 0): 1, (0, 0, 1): 1, (0, 1, 0): 1})
        want = over_one_minus_q((ONE_PLUS_A * core).scale(qat_monomial(0, 0, -1)), 1)
        assert series_equal(eval_p_strings("00", "000"), want)

    def test_all_ones(self):
        # prod_{i=1..l} (t^{i-1} + a), no denominator
        for l in range(1, 5):
            num = LaurentPoly.one()
            for i in range(1, l + 1):
                num = num * qat({(0, 0, i - 1): 1, (0, 1, 0): 1})
            assert eval_p_strings("1" * l, "1" * l) == GradedSeries.from_poly(num)

    def test_denominator_family(self, memo):
        # plain pairs only ever produce powers of (1 - q)
        for v, w in [("0000", "00"), ("0101", "1001"), ("000", "000")]:
            s = eval_p_strings(v, w, memo)
            assert set(s.den.as_dict()) <= {1}


class TestDeterminism:
    def test_fresh_tables_agree(self):
        a = eval_p_strings("0100", "0010", MemoTable())
        b = eval_p_strings("0100", "0010", MemoTable())
        assert a == b

    def test_descent_asserted(self, monkeypatch):
        monkeypatch.setattr(recursion, "DEBUG_DESCENT", True)
        eval_p_strings("0010", "0100", MemoTable())  # must not raise

    def test_long_pair_no_recursion_limit(self):
        # explicit work stack: depth 400 must evaluate even with the
        # interpreter limit squeezed near the current frame depth
        import inspect
        import sys
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(len(inspect.stack()) + 50)
        try:
            got = eval_p_strings("1", "1" + "0" * 399, MemoTable())
        finally:
            sys.setrecursionlimit(limit)
        assert got == GradedSeries.from_poly(ONE_PLUS_A)


class TestMemo:
    def test_fresh_table_empty(self):
        assert memo_stats(MemoTable()).entries == 0

    def test_unknot_entries(self):
        memo = MemoTable()
        eval_p_strings("0", "0", memo)
        stats = memo_stats(memo)
        assert stats.entries >= 2
        assert stats.misses >= 1

    def test_hit_on_reuse(self):
        memo = MemoTable()
        pair = pair_validate("0", "0")
        eval_p(pair, memo)
        before = memo.hits
        eval_p(pair, memo)
        assert memo.hits > before

    def test_key_is_verbatim_pair(self):
        memo = MemoTable()
        eval_p_strings("01", "10", memo)
        assert memo.peek(SeqPair("01", "10")) is not None
        # the swap is a theorem, never a key alias
        assert memo.peek(SeqPair("10", "01")) is None


class TestPersistence:
    def test_save_load_round_trip(self, tmp_path):
        path = str(tmp_path / "cache.tsv")
        memo = MemoTable()
        value = eval_p_strings("00", "000", memo)
        memo.save(path)
        reloaded = MemoTable(path=path)
        assert reloaded.peek(SeqPair("00", "000")) == value
        assert len(reloaded) == len(memo)

    def test_version_mismatch_rejected(self, tmp_path):
        path = tmp_path / "cache.tsv"
        path.write_text("some-other-encoder deadbeef\n")
        with pytest.raises(ValueError, match="version mismatch"):
            MemoTable(path=str(path))

    def test_save_without_path(self):
        with pytest.raises(ValueError):
            MemoTable().save()


class TestParallel:
    def test_matches_sequential(self):
        pair = pair_validate("0" * 5, "0" * 5)
        seq = eval_p(pair, MemoTable())
        par = eval_p_parallel(pair, MemoTable(), threads=8)
        assert seq == par

    def test_worker_count_env(self, monkeypatch):
        monkeypatch.setenv("TLH_THREADS", "4")
        assert worker_count() == 4
        monkeypatch.delenv("TLH_THREADS")
        assert worker_count() == 1
        for bad in ("0", "-2", "two"):
            monkeypatch.setenv("TLH_THREADS", bad)
            with pytest.raises(ValueError):
                worker_count()
