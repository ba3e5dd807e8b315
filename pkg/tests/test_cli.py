"""Command-line interface tests.

All commands run in-process through ``main(argv)`` so return codes and
outputs are asserted directly; one test also goes through the installed
console script to check the entry point wiring.
"""

from __future__ import annotations

import json
import subprocess
import sys

from snlab import Graph, SignedGraph, cycle_graph, path_graph, write_graph6, write_sgl
from snlab.cli import main


def write_records(path, records):
    write_sgl(records, str(path))
    return str(path)


class TestInvariantsCommand:
    def test_jsonl_fields(self, tmp_path, capsys):
        inp = write_records(tmp_path / "in.sgl", [
            SignedGraph.all_positive(cycle_graph(4)),
            SignedGraph.with_negatives(cycle_graph(6), [(0, 1)]),
        ])
        assert main(["invariants", inp]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2
        first = json.loads(lines[0])
        assert first == {"n": 4, "m": 2, "c": 1, "eta": 2, "balanced": True,
                         "lower": -1, "upper": 2, "s": 0}
        second = json.loads(lines[1])
        assert second["eta"] == 2 and second["balanced"] is False

    def test_out_file(self, tmp_path):
        inp = write_records(tmp_path / "in.sgl",
                            [SignedGraph.all_positive(path_graph(3))])
        out = tmp_path / "records.jsonl"
        assert main(["invariants", inp, "--out", str(out)]) == 0
        assert json.loads(out.read_text())["eta"] == 1

    def test_empty_input(self, tmp_path, capsys):
        empty = tmp_path / "empty.sgl"
        empty.write_text("")
        assert main(["invariants", str(empty)]) == 0
        assert capsys.readouterr().out == ""

    def test_missing_file(self, capsys):
        assert main(["invariants", "/nonexistent/input.sgl"]) == 1

    def test_parse_error_exit_code(self, tmp_path):
        bad = tmp_path / "bad.sgl"
        bad.write_text("2\n0 1 *\n")
        assert main(["invariants", str(bad)]) == 4


class TestClassifyCommand:
    def test_agreement_lines(self, tmp_path, capsys):
        inp = write_records(tmp_path / "in.sgl", [
            SignedGraph.with_negatives(cycle_graph(6), [(0, 1)]),
            SignedGraph.with_negatives(cycle_graph(5), [(1, 2)]),
        ])
        assert main(["classify", inp]) == 0
        lines = [json.loads(s) for s in capsys.readouterr().out.splitlines()]
        assert lines[0] == {"index": 0, "case": 2, "predicted_eta": 2,
                            "computed_eta": 2, "agreement": True}
        assert lines[1]["case"] == 1 and lines[1]["agreement"] is True

    def test_error_entries_continue(self, tmp_path, capsys):
        inp = write_records(tmp_path / "in.sgl", [
            SignedGraph.all_positive(cycle_graph(4)),  # balanced: error entry
            SignedGraph.all_positive(path_graph(3)),   # acyclic: error entry
            SignedGraph.with_negatives(cycle_graph(3), [(0, 1)]),
        ])
        assert main(["classify", inp]) == 0
        lines = [json.loads(s) for s in capsys.readouterr().out.splitlines()]
        assert "error" in lines[0] and "unbalanced" in lines[0]["error"]
        assert "error" in lines[1]
        assert lines[2]["agreement"] is True


class TestVerifyCommand:
    def test_clean_run_and_determinism(self, tmp_path, capsys):
        out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
        assert main(["verify", "--n-max", "4", "--out", str(out1)]) == 0
        assert main(["verify", "--n-max", "4", "--out", str(out2),
                     "--workers", "2"]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        report = json.loads(out1.read_text())
        assert report["totals"] == {"graphs": 10, "signatures": 23,
                                    "source_skipped": 0}
        assert report["violations"] == []
        assert report["upper_check"]["disagreements"] == []
        assert "4,1" in report["histogram"]
        # no counterexample artifact on a clean run
        assert not (tmp_path / "r1.json.counterexamples.json").exists()
        # wall time goes to stderr, never into the report
        assert "signatures" in capsys.readouterr().err

    def test_emit_all_jsonl(self, tmp_path):
        out = tmp_path / "records.jsonl"
        assert main(["verify", "--n-max", "3", "--emit-all",
                     "--out", str(out)]) == 0
        lines = [json.loads(s) for s in out.read_text().splitlines()]
        assert len(lines) == 5  # K1, K2, P3, C3(+), C3(-) signature records
        assert {"graph6", "negatives", "n", "m", "c", "eta", "balanced",
                "lower", "upper", "s"} <= set(lines[0])

    def test_graph6_source(self, tmp_path):
        src = tmp_path / "graphs.g6"
        write_graph6([cycle_graph(4), path_graph(5), cycle_graph(9)], str(src))
        out = tmp_path / "report.json"
        assert main(["verify", "--n-max", "6",
                     "--source", f"graph6:{src}", "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert report["totals"]["graphs"] == 2
        assert report["totals"]["source_skipped"] == 1
        assert report["config"]["source"].startswith("graph6:")

    def test_capacity_exit(self, tmp_path):
        assert main(["verify", "--n-max", "9",
                     "--out", str(tmp_path / "r.json")]) == 3

    def test_parse_error_exit(self, tmp_path):
        src = tmp_path / "bad.g6"
        src.write_text("D?\n")
        assert main(["verify", "--n-max", "6",
                     "--source", f"graph6:{src}",
                     "--out", str(tmp_path / "r.json")]) == 4

    def test_bad_source_scheme(self, tmp_path):
        assert main(["verify", "--n-max", "4", "--source", "sql:zzz",
                     "--out", str(tmp_path / "r.json")]) == 1

    def test_bad_n_max(self, tmp_path):
        assert main(["verify", "--n-max", "0",
                     "--out", str(tmp_path / "r.json")]) == 1


class TestGenerateCommand:
    def test_table_and_file(self, tmp_path, capsys):
        out = tmp_path / "family.sgl"
        assert main(["generate", "1", "1", "1", "--out", str(out)]) == 0
        printed = capsys.readouterr().out
        assert "predicted" in printed and "match: True" in printed
        text = out.read_text()
        assert text.startswith("16\n")
        assert text.count("-") == 1  # exactly one negative edge per hexagon

    def test_all_zero_is_usage_error(self, tmp_path):
        assert main(["generate", "0", "0", "0",
                     "--out", str(tmp_path / "f.sgl")]) == 1

    def test_negative_is_usage_error(self, tmp_path):
        assert main(["generate", "-1", "0", "2",
                     "--out", str(tmp_path / "f.sgl")]) == 1


class TestSachsCommand:
    def test_agreement(self, tmp_path, capsys):
        inp = write_records(tmp_path / "in.sgl", [
            SignedGraph.all_positive(cycle_graph(3)),
            SignedGraph.with_negatives(cycle_graph(4), [(0, 1)]),
        ])
        assert main(["sachs", inp]) == 0
        lines = [json.loads(s) for s in capsys.readouterr().out.splitlines()]
        assert lines[0] == {"index": 0, "coefficients": [1, 0, -3, -2],
                            "agrees_char_poly": True}
        assert lines[1]["coefficients"] == [1, 0, -4, 0, 4]

    def test_capacity(self, tmp_path):
        big = SignedGraph.all_positive(path_graph(13))
        inp = write_records(tmp_path / "in.sgl", [big])
        assert main(["sachs", inp]) == 3


class TestUsage:
    def test_no_command(self):
        assert main([]) == 1

    def test_unknown_command(self):
        assert main(["frobnicate"]) == 1

    def test_unknown_flag(self, tmp_path):
        assert main(["verify", "--n-max", "4", "--frobnicate",
                     "--out", str(tmp_path / "r.json")]) == 1

    def test_console_script(self, tmp_path):
        inp = write_records(tmp_path / "in.sgl",
                            [SignedGraph.all_positive(Graph(1, frozenset()))])
        proc = subprocess.run(
            [sys.executable, "-m", "snlab.cli", "invariants", inp],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["n"] == 1
