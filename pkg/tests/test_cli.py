import json

import pytest

from cayleysrg import from_graph6
from cayleysrg.cli import analyze_report, main, predicted_values, verify_range

REPORT_KEYS = [
    "n", "srg_params", "intersection_array", "claimed_group_order",
    "stabilizer_order", "transitivity", "oracle", "timings",
]


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_report_shape_and_exit_code(self, capsys):
        code, out, err = run_cli(capsys, "analyze", "5", "--oracle")
        assert code == 0
        report = json.loads(out)
        assert list(report) == REPORT_KEYS
        assert report["srg_params"] == {"v": 25, "k": 12, "lambda": 5, "mu": 6}
        assert report["intersection_array"] == {"b": [12, 6], "c": [1, 6], "diameter": 2}
        assert report["claimed_group_order"] == 600
        assert report["stabilizer_order"] == 24
        assert report["oracle"] == {"brute_order": 600, "agreement": True}
        assert "matched" in err

    def test_orbit_stabilizer_invariant(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "9")
        assert code == 0
        report = json.loads(out)
        assert report["claimed_group_order"] == 81 * report["stabilizer_order"]
        assert report["oracle"] is None

    def test_transitivity_block(self, capsys):
        _, out, _ = run_cli(capsys, "analyze", "6")
        trans = json.loads(out)["transitivity"]
        assert trans["vertex_transitive"] is True
        assert trans["edge_transitive"] is False
        assert trans["witnesses"]["edge"] is not None
        assert trans["witnesses"]["vertex"] is None
        assert sum(trans["orbit_counts"]["edges"]) == 36 * 15 // 2

    def test_deterministic_modulo_timings(self):
        first, ok1 = analyze_report(6)
        second, ok2 = analyze_report(6)
        assert ok1 == ok2 == []
        first.pop("timings")
        second.pop("timings")
        assert json.dumps(first) == json.dumps(second)

    def test_modulus_bounds_are_usage_errors(self, capsys):
        for argv in (["analyze", "3"], ["analyze", "1001"]):
            with pytest.raises(SystemExit) as exc:
                main(argv)
            assert exc.value.code == 2
        capsys.readouterr()

    def test_oracle_cap_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "8", "--oracle"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestExport:
    def test_graph6_output_decodes_to_the_graph(self, capsys, graph):
        code, out, _ = run_cli(capsys, "export", "4", "--format", "graph6")
        assert code == 0
        vc, adjacency = from_graph6(out.strip())
        assert vc == 16
        assert adjacency == list(graph(4).adjacency)

    def test_dot_output(self, capsys):
        code, out, _ = run_cli(capsys, "export", "4", "--format", "dot")
        assert code == 0
        assert out.startswith("graph cayley_4 {")
        assert sum(1 for l in out.splitlines() if " -- " in l) == 72

    def test_graph6_cap(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["export", "111", "--format", "graph6"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_format_required(self, capsys):
        with pytest.raises(SystemExit):
            main(["export", "4"])
        capsys.readouterr()


class TestVerify:
    def test_small_range_passes(self, capsys):
        code, out, err = run_cli(capsys, "verify", "4..6", "--oracle-upto", "5")
        assert code == 0
        summary = json.loads(out)
        assert summary["all_passed"] is True
        assert [row["n"] for row in summary["results"]] == [4, 5, 6]
        oracle_rows = [row["oracle"] for row in summary["results"]]
        assert oracle_rows[0] == {"brute_order": 192, "agreement": True}
        assert oracle_rows[2] is None
        assert "result" in err and "ok" in err

    def test_predictions_table(self):
        expected = predicted_values(4)
        assert expected["transitivity"]["edge_transitive"] is False
        assert predicted_values(5)["transitivity"]["distance_transitive"] is True
        assert predicted_values(7)["transitivity"]["arc_transitive"] is True
        assert predicted_values(7)["claimed_group_order"] == 6 * 49 * 6

    def test_verify_range_rows(self):
        summary = verify_range(5, 5, oracle_upto=5)
        row = summary["results"][0]
        assert row["passed"] and row["failed_checks"] == []
        assert row["transitivity"]["distance_transitive"] is True

    def test_bad_ranges_are_usage_errors(self, capsys):
        for rng in ("6..4", "x..y", "10", "3..5", "4..1001"):
            with pytest.raises(SystemExit) as exc:
                main(["verify", rng])
            assert exc.value.code == 2
        capsys.readouterr()

    def test_oracle_upto_cap(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "4..5", "--oracle-upto", "8"])
        assert exc.value.code == 2
        capsys.readouterr()
