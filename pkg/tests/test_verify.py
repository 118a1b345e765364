import pytest

from catfrac import verify
from catfrac.cli import main
from catfrac.verify import CheckResult

from oracles import (
    catalan_table,
    column_area,
    dyck_words,
    naive_count_increasing,
    naive_has_132,
)


class TestOracles:
    def test_area_polynomial_matches_independent_generator(self):
        for n in range(8):
            from collections import Counter

            expected = Counter(column_area(w) for w in dyck_words(n))
            assert verify.area_polynomial(n) == dict(expected)

    def test_pattern_scan_matches_naive_oracle(self):
        from collections import Counter
        from itertools import permutations

        for n in range(7):
            for k in (2, 3):
                expected = Counter(
                    naive_count_increasing(p, k)
                    for p in permutations(range(1, n + 1))
                    if naive_has_132(p) is None
                )
                assert verify.pattern_polynomial_by_scan(n, k) == dict(expected)

    def test_pattern_scan_totals_are_catalan(self):
        table = catalan_table(8)
        for n in range(9):
            assert sum(verify.pattern_polynomial_by_scan(n, 3).values()) == table[n]

    def test_level_profile_census_totals(self):
        table = catalan_table(7)
        for n in range(8):
            census = verify.level_profile_census(n)
            assert sum(census.values()) == table[n]

    def test_z_slice_q_rejects_multivariate(self):
        from catfrac.contfrac import LevelWeights, eval_cf

        series = eval_cf(LevelWeights.multivariate(), 3, 3)
        with pytest.raises(ValueError, match="level variables"):
            verify.z_slice_q(series, 2)


class TestChecksPass:
    def test_level_census(self):
        assert verify.check_level_census(6).ok

    def test_area_formula(self):
        assert verify.check_area_formula(8).ok

    def test_area_series(self):
        assert verify.check_area_series(8).ok

    def test_word_concatenation(self):
        assert verify.check_word_concatenation(8).ok

    def test_chain_subsets(self):
        assert verify.check_chain_subsets(6, k_max=4).ok

    def test_pattern_counts(self):
        assert verify.check_pattern_counts(7, k_max=5).ok

    def test_pattern_series_at_full_bounds(self):
        result = verify.check_pattern_series(9, ks=(2, 3, 4))
        assert result.ok
        assert result.checked == 3 * sum(catalan_table(9))

    def test_bijections(self):
        assert verify.check_bijections(7).ok


class TestCheckResult:
    def test_fail_collects_then_stops(self):
        result = CheckResult("x", {})
        kept = [result.fail(f"c{i}") for i in range(10)]
        assert result.ok is False
        assert len(result.failures) == 10
        assert kept[:4] == [True] * 4
        assert kept[4:] == [False] * 6

    def test_bijections_skips_avoider_scan_past_cap(self, monkeypatch):
        monkeypatch.setattr(verify, "PERM_ORACLE_MAX", 3)
        result = verify.check_bijections(5)
        assert result.ok
        assert any("avoider scan skipped" in line for line in result.detail_lines)


class TestCliFailurePath:
    def test_failing_check_exits_1_and_dumps_counterexample(self, capsys, monkeypatch):
        from catfrac import cli

        def broken(n, k):
            result = CheckResult("forced failure", {"max_edges": n})
            result.fail("n=2 tree='()()' expected=1 got=0")
            return result

        monkeypatch.setitem(cli.CHECKS, "lemma2", {"run": broken, "max_edges": 4, "takes_k": False})
        code = main(["verify", "--check", "lemma2"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL n=2 tree='()()'" in out
        assert out.splitlines()[-1].startswith("FAIL lemma2")

    def test_failing_check_json(self, capsys, monkeypatch):
        import json

        from catfrac import cli

        def broken(n, k):
            result = CheckResult("forced failure", {"max_edges": n})
            result.fail("counterexample")
            return result

        monkeypatch.setitem(cli.CHECKS, "theorem1", {"run": broken, "max_edges": 4, "takes_k": False})
        code = main(["verify", "--check", "theorem1", "--json"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 1
        assert doc["ok"] is False
        assert doc["failures"] == ["counterexample"]
