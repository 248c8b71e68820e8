from __future__ import annotations

import io
import json

import pytest

from conftest import TWO_DIAMONDS_EDGES, two_diamonds_graph
from zforcing import CorpusSummary, complete_graph, path_graph, to_graph6
from zforcing.cli import main


def run_cli(capsys, argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    doc = json.loads(captured.out) if captured.out.strip() else None
    return code, doc, captured.err


@pytest.fixture
def edges_file(tmp_path):
    lines = ["8 11"] + [f"{u} {v}" for u, v in TWO_DIAMONDS_EDGES]
    path = tmp_path / "two_diamonds.txt"
    path.write_text("\n".join(lines) + "\n")
    return str(path)


@pytest.fixture
def star_file(tmp_path):
    path = tmp_path / "star.txt"
    path.write_text("4 3\n1 2\n1 3\n1 4\n")
    return str(path)


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("4 3\n1 2\n2 3\n3 4\n")
    return str(path)


class TestSolve:
    def test_psd(self, capsys, edges_file):
        code, doc, _ = run_cli(capsys, ["solve", "--rule", "psd", "--edges", edges_file])
        assert code == 0
        assert doc["command"] == "solve"
        assert doc["value"] == 3
        assert doc["witness"] == [1, 2, 6]
        assert doc["tested"] == 40
        assert "minimum_sets" not in doc

    def test_cap_lists_sets(self, capsys, edges_file):
        code, doc, _ = run_cli(
            capsys, ["solve", "--edges", edges_file, "--cap", "5"])
        assert code == 0
        assert len(doc["minimum_sets"]) == 5
        assert doc["minimum_sets"][0] == [1, 2, 6]

    def test_bad_cap(self, capsys, edges_file):
        code, doc, err = run_cli(
            capsys, ["solve", "--edges", edges_file, "--cap", "0"])
        assert code == 2
        assert doc is None
        assert "error:" in err

    def test_graph6_takes_precedence(self, capsys, edges_file):
        code, doc, _ = run_cli(
            capsys, ["solve", "--graph6", "A_", "--edges", edges_file])
        assert code == 0
        assert doc["n"] == 2

    def test_stdin_edge_list(self, capsys, monkeypatch, edges_file):
        text = open(edges_file).read()
        code, doc, _ = run_cli(capsys, ["solve"], stdin=text, monkeypatch=monkeypatch)
        assert code == 0
        assert doc["n"] == 8
        assert doc["value"] == 3


class TestTraceAndList:
    def test_greedy_trace(self, capsys, edges_file):
        code, doc, _ = run_cli(
            capsys, ["trace", "--blue", "2,4,6", "--edges", edges_file])
        assert code == 0
        assert doc["schedule"] == "greedy"
        assert doc["tau"] == 3
        assert doc["all_blue"] is True
        assert doc["steps"][0] == [
            {"source": 4, "target": 3}, {"source": 4, "target": 5}]
        assert doc["expansion"][0] == [2, 4, 6]
        assert doc["expansion"][-1] == list(range(1, 9))

    def test_lex_trace(self, capsys, edges_file):
        code, doc, _ = run_cli(
            capsys, ["trace", "--blue", "2,4,6", "--schedule", "lex",
                     "--edges", edges_file])
        assert code == 0
        assert doc["tau"] == 5
        assert all(len(step) == 1 for step in doc["steps"])

    def test_trace_stalls_quietly(self, capsys, edges_file):
        code, doc, _ = run_cli(
            capsys, ["trace", "--rule", "standard", "--blue", "2,4,6",
                     "--edges", edges_file])
        assert code == 0
        assert doc["tau"] == 0
        assert doc["all_blue"] is False

    def test_list_command(self, capsys, edges_file):
        code, doc, _ = run_cli(
            capsys, ["list", "--blue", "2,4,6", "--edges", edges_file])
        assert code == 0
        assert doc["command"] == "list"
        assert doc["schedule"] == "lex"
        assert doc["steps"][0] == [{"source": 4, "target": 3}]

    def test_list_rejects_non_forcing(self, capsys, edges_file):
        code, doc, err = run_cli(
            capsys, ["list", "--rule", "standard", "--blue", "2,4,6",
                     "--edges", edges_file])
        assert code == 2
        assert "error:" in err

    def test_bad_blue_spec(self, capsys, edges_file):
        code, _, err = run_cli(
            capsys, ["trace", "--blue", "2,x", "--edges", edges_file])
        assert code == 2
        assert "error:" in err


class TestBundle:
    def test_frozen_document(self, capsys, edges_file):
        code, doc, _ = run_cli(
            capsys, ["bundle", "--blue", "2,4,6", "--x", "7",
                     "--edges", edges_file])
        assert code == 0
        assert doc["t_x"] == 2
        assert doc["paths"] == [[2], [4, 5, 7], [6]]
        assert doc["terminus"] == [2, 6, 7]

    def test_vertex_out_of_range(self, capsys, edges_file):
        code, _, err = run_cli(
            capsys, ["bundle", "--blue", "2,4,6", "--x", "9",
                     "--edges", edges_file])
        assert code == 2
        assert "error:" in err


class TestImproveConnectify:
    def test_connectify_star(self, capsys, star_file):
        code, doc, _ = run_cli(capsys, ["connectify", "--edges", star_file])
        assert code == 0
        assert doc["set"] == [4]
        assert doc["iterations"] == 1
        assert doc["complement_connected"] is True
        assert doc["steps"][0]["w_star"] == 4

    def test_improve_default_component(self, capsys, star_file):
        code, doc, _ = run_cli(
            capsys, ["improve", "--blue", "1", "--edges", star_file])
        assert code == 0
        assert doc["result"] == "step"
        assert doc["component"] == [2]
        assert doc["step"]["t"] == 3
        assert doc["step"]["s_prime"] == [4]

    def test_improve_refutation(self, capsys, p4_file):
        code, doc, _ = run_cli(
            capsys, ["improve", "--blue", "2,3", "--edges", p4_file])
        assert code == 0
        assert doc["result"] == "refutation"
        assert doc["refutation"] == {"y": 3, "smaller": [2]}

    def test_improve_named_component(self, capsys, p4_file):
        code, doc, _ = run_cli(
            capsys, ["improve", "--blue", "2,3", "--x", "4",
                     "--edges", p4_file])
        assert code == 0
        assert doc["component"] == [4]
        assert doc["result"] == "refutation"
        assert doc["refutation"] == {"y": 2, "smaller": [3]}

    def test_improve_x_inside_s(self, capsys, p4_file):
        code, _, err = run_cli(
            capsys, ["improve", "--blue", "2,3", "--x", "2",
                     "--edges", p4_file])
        assert code == 2
        assert "error:" in err


class TestClawsPerfect:
    def test_claws(self, capsys, star_file):
        code, doc, _ = run_cli(capsys, ["claws", "--edges", star_file])
        assert code == 0
        assert doc["claw_free"] is False
        assert doc["claws"] == [{"center": 1, "leaves": [2, 3, 4]}]

    def test_claw_free(self, capsys, edges_file):
        code, doc, _ = run_cli(capsys, ["claws", "--edges", edges_file])
        assert code == 0
        assert doc["claw_free"] is True
        assert doc["claws"] == []

    def test_perfect_direct(self, capsys, p4_file):
        code, doc, _ = run_cli(capsys, ["perfect", "--edges", p4_file])
        assert code == 0
        assert doc["perfect"] is True

    def test_perfect_clawfree_shortcut(self, capsys, star_file):
        code, doc, _ = run_cli(
            capsys, ["perfect", "--mode", "clawfree", "--edges", star_file])
        assert code == 0
        assert doc["perfect"] is False

    def test_perfect_direct_size_cap(self, capsys):
        code, _, err = run_cli(
            capsys, ["perfect", "--graph6", to_graph6(path_graph(7))])
        assert code == 2
        assert "error:" in err


class TestVerify:
    def test_enumerate_frozen(self, capsys):
        code, doc, _ = run_cli(
            capsys, ["verify", "--mode", "theorem", "--enumerate", "4"])
        assert code == 0
        assert doc["total"] == 64
        assert doc["claw_free"] == 60
        assert doc["checked"] == 34
        assert doc["failures"] == []
        assert doc["source"] == "enumerate:4"

    def test_single_graph6(self, capsys):
        code, doc, _ = run_cli(
            capsys, ["verify", "--mode", "monotonicity", "--graph6",
                     to_graph6(complete_graph(3))])
        assert code == 0
        assert doc["total"] == 1
        assert doc["checked"] == 1

    def test_graph6_lines_from_file(self, capsys, tmp_path):
        lines = [to_graph6(two_diamonds_graph()), to_graph6(complete_graph(3))]
        path = tmp_path / "corpus.g6"
        path.write_text("\n".join(lines) + "\n")
        code, doc, _ = run_cli(
            capsys, ["verify", "--mode", "theorem", "--edges", str(path)])
        assert code == 0
        assert doc["total"] == 2
        assert doc["checked"] == 2
        assert doc["source"] == str(path)

    def test_graph6_lines_from_stdin(self, capsys, monkeypatch):
        text = to_graph6(path_graph(4)) + "\n"
        code, doc, _ = run_cli(
            capsys, ["verify", "--mode", "theorem"], stdin=text,
            monkeypatch=monkeypatch)
        assert code == 0
        assert doc["total"] == 1
        assert doc["source"] == "stdin"

    def test_bad_graph6_line_is_usage_error(self, capsys, monkeypatch):
        code, _, err = run_cli(
            capsys, ["verify"], stdin="not graph6\n", monkeypatch=monkeypatch)
        assert code == 2
        assert "error:" in err

    def test_failures_flip_exit_code(self, capsys, monkeypatch):
        fake = CorpusSummary(mode="theorem", total=1, claw_free=1, checked=1,
                             failures=["A_"])
        monkeypatch.setattr("zforcing.cli.run_corpus", lambda *a, **k: fake)
        code, doc, _ = run_cli(
            capsys, ["verify", "--graph6", "A_"])
        assert code == 1
        assert doc["failures"] == ["A_"]


class TestUsage:
    def test_no_subcommand(self, capsys):
        assert main([]) == 2
        capsys.readouterr()

    def test_unknown_flag(self, capsys):
        assert main(["solve", "--frobnicate"]) == 2
        capsys.readouterr()

    def test_missing_required(self, capsys):
        assert main(["bundle", "--blue", "1"]) == 2
        capsys.readouterr()

    def test_missing_edges_file(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, ["solve", "--edges", str(tmp_path / "absent.txt")])
        assert code == 2
        assert "error:" in err


class TestDeterminism:
    def test_identical_runs_modulo_elapsed(self, capsys, edges_file):
        outs = []
        for _ in range(2):
            main(["solve", "--edges", edges_file, "--cap", "3"])
            raw = capsys.readouterr().out
            outs.append("\n".join(line for line in raw.splitlines()
                                  if "elapsed_ms" not in line))
        assert outs[0] == outs[1]

    def test_verify_runs_identical_modulo_elapsed(self, capsys):
        outs = []
        for _ in range(2):
            main(["verify", "--enumerate", "3"])
            raw = capsys.readouterr().out
            outs.append("\n".join(line for line in raw.splitlines()
                                  if "elapsed_ms" not in line))
        assert outs[0] == outs[1]
