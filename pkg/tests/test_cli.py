"""CLI verdicts, exit codes, and the JSON report shape.

Most checks drive main() in-process for speed; a few go through
`python -m prefdomains` to cover the real entry point.
"""

import itertools
import json
import subprocess
import sys

import pytest

from prefdomains import parse_profile
from prefdomains.cli import main

GS_PAIR = "candidates: a,b,c,d\nvote: a>b>c>d\nvote: b>d>a>c\n"
THREE_CYCLE = "candidates: a,b,c\nvote: a>b>c\nvote: b>c>a\nvote: c>a>b\n"
TRIANGLE = "vertices: 3\nedge: 0 1\nedge: 0 2\nedge: 1 2\n"

JSON_KEYS = ["command", "domain", "verdict", "parts", "witness", "order", "tree", "stats"]


@pytest.fixture
def profile_file(tmp_path):
    def write(text):
        f = tmp_path / "profile.txt"
        f.write_text(text)
        return str(f)

    return write


@pytest.fixture
def graph_file(tmp_path):
    def write(text):
        f = tmp_path / "graph.txt"
        f.write_text(text)
        return str(f)

    return write


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestRecognize:
    def test_member(self, capsys, profile_file):
        f = profile_file("candidates: a,b\nvote: a>b\nvote: b>a\n")
        assert main(["recognize", f, "--domain", "sp"]) == 0
        assert capsys.readouterr().out == "MEMBER\n"

    def test_non_member(self, capsys, profile_file):
        f = profile_file(GS_PAIR)
        assert main(["recognize", f, "--domain", "gs"]) == 1
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "NON-MEMBER"
        assert out[1] == "witness: votes 1,2 candidates a,b,c,d pattern gs-2x4"

    def test_json_keys(self, capsys, profile_file):
        f = profile_file(GS_PAIR)
        code, doc = run_json(capsys, ["recognize", f, "--domain", "gs", "--json"])
        assert code == 1
        assert list(doc) == JSON_KEYS
        assert doc["command"] == "recognize"
        assert doc["verdict"] == "NON-MEMBER"
        assert doc["witness"] == {
            "votes": [1, 2],
            "candidates": ["a", "b", "c", "d"],
            "pattern": "gs-2x4",
        }
        assert doc["stats"]["distinct_votes"] == 2

    def test_member_json(self, capsys, profile_file):
        f = profile_file(GS_PAIR)
        code, doc = run_json(capsys, ["recognize", f, "--domain", "mr", "--json"])
        assert code == 0
        assert doc["verdict"] == "MEMBER"
        assert doc["witness"] is None


class TestExplain:
    def test_gs_tree(self, capsys, profile_file):
        f = profile_file(
            "candidates: a,b,c,d\nvote: a>b>c>d\nvote: b>a>d>c\nvote: c>d>a>b\n"
        )
        assert main(["explain", f, "--domain", "gs"]) == 0
        assert capsys.readouterr().out == "((a,b),(c,d))\n"

    def test_gs_tree_json(self, capsys, profile_file):
        f = profile_file("candidates: a,b,c\nvote: a>b>c\n")
        code, doc = run_json(capsys, ["explain", f, "--domain", "gs", "--json"])
        assert code == 0
        assert doc["tree"] == "(a,(b,c))"
        assert doc["order"] is None

    def test_catgs_order(self, capsys, profile_file):
        f = profile_file("candidates: a,b,c\nvote: a>b>c\n")
        assert main(["explain", f, "--domain", "catgs"]) == 0
        assert capsys.readouterr().out == "a,b,c\n"

    def test_catgs_witness(self, capsys, profile_file):
        f = profile_file(GS_PAIR)
        code, doc = run_json(capsys, ["explain", f, "--domain", "catgs", "--json"])
        assert code == 1
        assert doc["witness"]["pattern"].startswith("catgs-")

    def test_rejects_other_domains(self, capsys, profile_file):
        f = profile_file(GS_PAIR)
        with pytest.raises(SystemExit) as e:
            main(["explain", f, "--domain", "sp"])
        assert e.value.code == 2


class TestPartition2:
    def test_yes(self, capsys, profile_file):
        f = profile_file(THREE_CYCLE)
        assert main(["partition2", f, "--domain", "vr"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "YES"
        assert len(out) == 3
        votes = sorted(int(i) for line in out[1:] for i in line.split())
        assert votes == [1, 2, 3]

    def test_yes_json_stats(self, capsys, profile_file):
        f = profile_file(THREE_CYCLE)
        code, doc = run_json(capsys, ["partition2", f, "--domain", "vr", "--json"])
        assert code == 0
        assert doc["verdict"] == "YES"
        assert doc["stats"]["case"] == "case2"
        assert doc["stats"]["dangerous_triples"] == 3
        assert doc["stats"]["distinct_votes"] == 3
        assert 1 in doc["parts"][0]

    def test_member_gets_empty_second_line(self, capsys, profile_file):
        f = profile_file("candidates: a,b\nvote: a>b\n")
        assert main(["partition2", f, "--domain", "sp"]) == 0
        assert capsys.readouterr().out == "YES\n1\n\n"

    def test_no(self, capsys, profile_file):
        lines = ["candidates: %s" % ",".join("c%d" % i for i in range(12))]
        base = list(range(12))
        twist = (1, 3, 0, 2)
        for block in range(3):
            other = 4 * ((block + 1) % 3)
            vote = list(base)
            for t, c in enumerate(twist):
                vote[other + t] = other + c
            lines.append("vote: %s" % ">".join("c%d" % c for c in vote))
        f = profile_file("\n".join(lines) + "\n")
        assert main(["partition2", f, "--domain", "gs"]) == 1
        assert capsys.readouterr().out == "NO\n"


class TestPartitionBf:
    def test_yes(self, capsys, profile_file):
        f = profile_file(THREE_CYCLE)
        assert main(["partition-bf", f, "--domain", "vr", "-k", "2"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "YES" and len(out) == 3

    def test_no(self, capsys, profile_file):
        f = profile_file(THREE_CYCLE)
        assert main(["partition-bf", f, "--domain", "vr", "-k", "1"]) == 1
        assert capsys.readouterr().out == "NO\n"

    def test_budget(self, capsys, profile_file):
        votes = "".join(
            "vote: %s\n" % ">".join("c%d" % c for c in perm)
            for perm in itertools.permutations(range(4))
        )
        f = profile_file("candidates: c0,c1,c2,c3\n" + votes)
        code = main(["partition-bf", f, "--domain", "vr", "-k", "4", "--budget", "3"])
        assert code == 3
        assert capsys.readouterr().out == "BUDGET-EXCEEDED\n"


class TestGraphCommands:
    def test_reduce_emits_parseable_profile(self, capsys, graph_file):
        f = graph_file("vertices: 2\n")
        assert main(["reduce", f, "-k", "2"]) == 0
        p = parse_profile(capsys.readouterr().out)
        assert p.n == 2 + 2 * 4
        assert p.names[0].startswith("a")

    def test_clique_bf_yes(self, capsys, graph_file):
        f = graph_file(TRIANGLE)
        assert main(["clique-bf", f, "-k", "1"]) == 0
        assert capsys.readouterr().out == "YES\n0 1 2\n"

    def test_clique_bf_no(self, capsys, graph_file):
        f = graph_file("vertices: 2\n")
        assert main(["clique-bf", f, "-k", "1"]) == 1
        assert capsys.readouterr().out == "NO\n"

    def test_clique_bf_json(self, capsys, graph_file):
        f = graph_file(TRIANGLE)
        code, doc = run_json(capsys, ["clique-bf", f, "-k", "1", "--json"])
        assert code == 0
        assert doc["parts"] == [[0, 1, 2]]
        assert doc["domain"] is None


class TestGen:
    def test_deterministic(self, capsys):
        argv = ["gen", "--model", "sp-union", "--votes", "4", "--cands", "5", "--seed", "9"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first
        assert parse_profile(first).n == 4

    def test_groups(self, capsys):
        argv = ["gen", "--votes", "2", "--cands", "3", "--groups", "3", "--seed", "1"]
        assert main(argv) == 0
        assert parse_profile(capsys.readouterr().out).n == 6

    def test_bad_params(self, capsys):
        argv = ["gen", "--votes", "2", "--cands", "0"]
        assert main(argv) == 2


class TestErrors:
    def test_missing_file(self, capsys):
        assert main(["recognize", "/nonexistent", "--domain", "sp"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_malformed_profile(self, capsys, profile_file):
        f = profile_file("candidates: a,b\nvote: a\n")
        assert main(["recognize", f, "--domain", "sp"]) == 2

    def test_malformed_graph(self, capsys, graph_file):
        f = graph_file("edge: 0 1\n")
        assert main(["clique-bf", f, "-k", "1"]) == 2

    def test_unknown_domain_usage_error(self, profile_file):
        f = profile_file(GS_PAIR)
        with pytest.raises(SystemExit) as e:
            main(["recognize", f, "--domain", "zz"])
        assert e.value.code == 2

    def test_no_command_usage_error(self):
        with pytest.raises(SystemExit) as e:
            main([])
        assert e.value.code == 2


class TestEntryPoint:
    def test_module_invocation_stdin(self):
        got = subprocess.run(
            [sys.executable, "-m", "prefdomains", "recognize", "-", "--domain", "gs"],
            input=GS_PAIR,
            capture_output=True,
            text=True,
        )
        assert got.returncode == 1
        assert got.stdout.splitlines()[0] == "NON-MEMBER"

    def test_rerun_byte_identical(self):
        argv = [
            sys.executable,
            "-m",
            "prefdomains",
            "recognize",
            "-",
            "--domain",
            "gs",
            "--json",
        ]
        runs = [
            subprocess.run(argv, input=GS_PAIR, capture_output=True, text=True)
            for _ in range(2)
        ]
        assert runs[0].stdout == runs[1].stdout
        assert runs[0].returncode == runs[1].returncode == 1

    def test_reduce_pipes_into_recognize(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("vertices: 2\n")
        reduced = subprocess.run(
            [sys.executable, "-m", "prefdomains", "reduce", str(f), "-k", "2"],
            capture_output=True,
            text=True,
        )
        assert reduced.returncode == 0
        got = subprocess.run(
            [sys.executable, "-m", "prefdomains", "partition2", "-", "--domain", "vr"],
            input=reduced.stdout,
            capture_output=True,
            text=True,
        )
        assert got.returncode == 0
        assert got.stdout.splitlines()[0] == "YES"
