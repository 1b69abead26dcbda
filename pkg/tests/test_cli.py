import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ulrich_ruled.cli import (
    VERDICT_KEYS,
    SweepSpec,
    dumps,
    main,
    parse_range,
    rank2_record,
    run_sweep,
    verdict_record,
)
from ulrich_ruled.errors import ValidationError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(text):
    return [json.loads(line) for line in text.splitlines()]


class TestVerdict:
    def test_exists(self, capsys):
        code, out, _ = run(capsys, "verdict", "--g", "1", "--e", "-1", "--a", "3", "--b", "5")
        assert code == 0
        (rec,) = records(out)
        assert tuple(rec) == VERDICT_KEYS
        assert rec["verdict"] == "EXISTS"
        assert rec["classes"] == [[5, 4], [2, 12]]
        assert rec["citation"]

    def test_parity(self, capsys):
        code, out, _ = run(capsys, "verdict", "--g", "3", "--e", "-3", "--a", "4", "--b", "9")
        assert code == 0
        (rec,) = records(out)
        assert rec["verdict"] == "NOT_EXISTS"
        assert rec["classes"] == []
        assert rec["notes"][0] == "violated: (a-1)e odd"

    def test_genus0_negative_e(self, capsys):
        code, out, err = run(capsys, "verdict", "--g", "0", "--e", "-1", "--a", "1", "--b", "1")
        assert code == 2
        assert out == ""
        assert "e >= 0" in err or "nagata" in err

    def test_flags_recorded(self, capsys):
        _, out, _ = run(capsys, "verdict", "--g", "4", "--e", "-2", "--a", "3", "--b", "3", "--generic-bundle")
        (rec,) = records(out)
        assert rec["verdict"] == "EXISTS_GENERIC_BUNDLE"
        assert rec["notes"][-1] == "assumed: generic_bundle"

    def test_not_very_ample(self, capsys):
        code, _, err = run(capsys, "verdict", "--g", "1", "--e", "0", "--a", "2", "--b", "2")
        assert code == 2 and err


class TestOtherCommands:
    def test_classes(self, capsys):
        code, out, _ = run(capsys, "classes", "--g", "2", "--e", "-2", "--a", "2", "--b", "5")
        (rec,) = records(out)
        assert code == 0
        assert rec["high"] == [3, 5] and rec["low"] == [1, 14]
        assert rec["dual_of_high"] == rec["low"]
        assert rec["numerical_check"] == [True, True]

    def test_classes_parity_is_validation(self, capsys):
        code, _, err = run(capsys, "classes", "--g", "2", "--e", "-1", "--a", "2", "--b", "5")
        assert code == 2 and "odd" in err

    def test_dual(self, capsys):
        _, out, _ = run(capsys, "dual", "--g", "0", "--e", "0", "--a", "1", "--b", "1", "--class", "1,0")
        (rec,) = records(out)
        assert rec["dual"] == [0, 1] and rec["numerical_check"] is True

    def test_bad_class_syntax(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["dual", "--g", "0", "--e", "0", "--a", "1", "--b", "1", "--class", "1;0"])
        assert exc.value.code == 2

    def test_rank2_hyperplane(self, capsys):
        _, out, _ = run(capsys, "rank2", "--g", "1", "--e", "0", "--a", "2", "--b", "2")
        (rec,) = records(out)
        assert rec["construction"] == "hyperplane"
        assert (rec["c1"], rec["c2"], rec["z_degree"]) == ([4, 6], 14, 2)
        assert (rec["family_dim"], rec["semistable_bound"]) == (8, "1")
        assert rec["chern_ok"] is True

    def test_rank2_falls_back_to_degree_zero(self):
        # threshold max{6, 4, 10/3} = 6 is not exceeded by b = 4
        rec = rank2_record(5, 0, 6, 4)
        assert rec["construction"] == "degree_zero"
        assert rec["sub"] == [8, 8] and rec["z_degree"] == 12

    def test_rank2_no_construction(self, capsys):
        code, _, err = run(capsys, "rank2", "--g", "0", "--e", "1", "--a", "1", "--b", "3")
        assert code == 2
        assert "g >= 1" in err

    def test_theta(self, capsys):
        _, out, _ = run(capsys, "theta", "--g", "3", "--e", "-2", "--a", "2")
        (rec,) = records(out)
        assert rec["target"] == "Pic^1"
        assert (rec["rank"], rec["degree"]) == (2, 2)
        assert rec["status"] == "PROPER_GENERIC_BUNDLE"

    def test_theta_odd_flags_conjecture(self, capsys):
        _, out, _ = run(capsys, "theta", "--g", "4", "--e", "-3", "--a", "5", "--generic-curve")
        (rec,) = records(out)
        assert rec["status"] == "PROPER_GENERIC_CURVE_AND_BUNDLE"
        assert any("conjectural" in n for n in rec["notes"])

    def test_strata(self, capsys):
        _, out, _ = run(capsys, "strata", "--g", "5", "--r", "2", "--d", "1", "--r-prime", "1")
        recs = records(out)
        assert [r["s"] for r in recs] == [1, 3]
        assert [r["dimension"] for r in recs] == [14, 16]

    def test_strata_low_genus(self, capsys):
        code, _, err = run(capsys, "strata", "--g", "1", "--r", "2", "--d", "1", "--r-prime", "1")
        assert code == 2 and "no integers" in err

    @pytest.mark.parametrize(
        "e,a,b,expected",
        [(0, 1, 1, [[0, 1], [1, 0]]), (1, 1, 2, [[0, 2], [1, 1]]), (2, 1, 3, [[0, 3], [1, 2]]), (2, 2, 5, [])],
    )
    def test_oracle(self, capsys, e, a, b, expected):
        _, out, _ = run(capsys, "oracle", "--e", str(e), "--a", str(a), "--b", str(b), "--grid-limit", "10")
        (rec,) = records(out)
        assert rec["ulrich_classes"] == expected
        assert rec["agree"] is True

    def test_oracle_negative_e(self, capsys):
        code, _, _ = run(capsys, "oracle", "--e=-1", "--a", "1", "--b", "1")
        assert code == 2


class TestSweep:
    ARGS = ("sweep", "--g", "1:3", "--e=-3:0", "--a", "1:4", "--b", "3:6")

    def test_example_counts(self, capsys):
        code, out, err = run(capsys, *self.ARGS)
        assert code == 0
        rows = records(out)
        # e ranges over 2, 3, 4 admissible values for g = 1, 2, 3
        assert len(rows) == (2 + 3 + 4) * 4 * 4
        assert "skipped 48" in err and "nagata" in err
        assert all(r["verdict"] and tuple(r) == VERDICT_KEYS for r in rows)
        keys = [(r["g"], r["e"], r["a"], r["b"]) for r in rows]
        assert keys == sorted(keys)

    def test_deterministic(self, capsys):
        first = run(capsys, *self.ARGS)[1]
        second = run(capsys, *self.ARGS)[1]
        assert first == second

    def test_empty(self, capsys):
        code, out, _ = run(capsys, "sweep", "--g", "3:1", "--e", "0", "--a", "1", "--b", "1")
        assert code == 0 and out == ""

    def test_errors_do_not_abort(self):
        result = run_sweep(SweepSpec((1, 1), (0, 0), (2, 2), (1, 3)))
        verdicts = [r["verdict"] for r in result.rows]
        assert verdicts == ["ERROR", "ERROR", "EXISTS"]

    def test_rank2_attached(self):
        result = run_sweep(SweepSpec((1, 1), (0, 0), (2, 2), (2, 3), with_rank2=True))
        assert result.rows[0]["rank2"]["c2"] == 14

    def test_table_and_out(self, capsys, tmp_path):
        target = tmp_path / "t.txt"
        code, out, _ = run(capsys, *self.ARGS, "--table", "--out", str(target))
        assert code == 0 and out == ""
        lines = target.read_text(encoding="utf-8").splitlines()
        assert lines[0].split()[:5] == ["g", "e", "a", "b", "verdict"]
        assert len(lines) == 1 + 144

    def test_parse_range(self):
        assert parse_range("-3:0") == (-3, 0)
        assert parse_range("4") == (4, 4)


class TestRoundTrip:
    @settings(max_examples=60)
    @given(st.integers(0, 5), st.integers(-5, 5), st.integers(1, 6), st.integers(0, 30),
           st.booleans(), st.booleans())
    def test_json(self, g, e, a, b, gb, gc):
        e = max(e, -g)
        try:
            rec = verdict_record(g, e, a, b, gb, gc)
        except ValidationError:
            return
        text = dumps(rec)
        assert json.loads(text) == rec
        assert dumps(json.loads(text)) == text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ulrich_ruled", "verdict", "--g", "0", "--e", "0", "--a", "1", "--b", "1"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["verdict"] == "EXISTS"
