"""cli: golden outputs and the exit-status discipline."""

import pytest

from asymtree import add_leaf, build_tree, e7_code, e7_tree, treefile
from asymtree.cli import main
from shapes import path_tree


@pytest.fixture
def e7_file(tmp_path):
    path = tmp_path / "e7.tree"
    treefile.dump(e7_tree(), path)
    return str(path)


@pytest.fixture
def spider_file(tmp_path):
    path = tmp_path / "spider.tree"
    treefile.dump(add_leaf(e7_tree(), 6), path)
    return str(path)


class TestCheck:
    def test_e7_report(self, e7_file, capsys):
        assert main(["check", e7_file]) == 0
        out = capsys.readouterr().out
        assert "asymmetric: yes" in out
        assert "|Aut|=1" in out
        assert "centers: 0 4" in out
        assert "radius: 3" in out
        assert f"code: {e7_code()}" in out

    def test_p2_report(self, tmp_path, capsys):
        path = tmp_path / "p2.tree"
        treefile.dump(build_tree([(0, 1)]), path)
        assert main(["check", str(path)]) == 0
        out = capsys.readouterr().out
        assert "asymmetric: no" in out
        assert "|Aut|=2" in out

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.tree"
        path.write_text("3\n0 1\n")  # one edge short
        assert main(["check", str(path)]) == 2

    def test_comments_and_blanks_ignored(self, tmp_path, capsys):
        path = tmp_path / "c.tree"
        path.write_text("# a comment\n2\n\n0 1\n")
        assert main(["check", str(path)]) == 0


class TestSpecialLeaf:
    def test_e7_from_hub(self, e7_file, capsys):
        assert main(["special-leaf", e7_file, "--root", "0"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "leaf 1"
        assert out[1] == "path 0 1"
        assert out[2] == "step 1 |Ci|=1 min_other=1"

    def test_p3_tie_break(self, tmp_path, capsys):
        path = tmp_path / "p3.tree"
        treefile.dump(path_tree(3), path)
        assert main(["special-leaf", str(path), "--root", "1"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "leaf 0"

    def test_bad_root(self, e7_file, capsys):
        assert main(["special-leaf", e7_file, "--root", "99"]) == 2


class TestReduce:
    def test_e7_empty_trace(self, e7_file, capsys):
        assert main(["reduce", e7_file]) == 0
        assert capsys.readouterr().out.splitlines() == [e7_code()]

    def test_spider_one_step(self, spider_file, capsys):
        assert main(["reduce", spider_file]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 3
        assert lines[1] == "delete 7"
        assert lines[2] == e7_code()

    def test_symmetric_input(self, tmp_path, capsys):
        path = tmp_path / "p5.tree"
        treefile.dump(path_tree(5), path)
        assert main(["reduce", str(path)]) == 2
        assert "not automorphism-free" in capsys.readouterr().err

    def test_seeded_is_deterministic(self, spider_file, capsys):
        assert main(["reduce", spider_file, "--random-tiebreak", "7"]) == 0
        first = capsys.readouterr().out
        assert main(["reduce", spider_file, "--random-tiebreak", "7"]) == 0
        assert capsys.readouterr().out == first


class TestEnumerate:
    def test_n4_two_records(self, capsys):
        assert main(["enumerate", "4"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 2
        for line in lines:
            code, edges = line.split("\t")
            assert code.startswith(("B", "C"))
            assert len(edges.split(",")) == 3

    def test_n6_asymmetric_empty(self, capsys):
        assert main(["enumerate", "6", "--asymmetric"]) == 0
        assert capsys.readouterr().out == ""

    def test_n7_asymmetric_single(self, capsys):
        assert main(["enumerate", "7", "--asymmetric"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 1
        assert lines[0].split("\t")[0] == e7_code()

    def test_count_only_tsv(self, capsys):
        assert main(["enumerate", "7", "--count-only"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n\ttotal\tasymmetric"
        assert lines[7] == "7\t11\t1"

    def test_out_of_range(self, capsys):
        assert main(["enumerate", "99"]) == 2


class TestVerify:
    def test_up_to_nine(self, capsys):
        assert main(["verify", "--max-n", "9"]) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert "n=7 asymmetric=1 reduced=1" in lines
        assert f"minimal: {e7_code()}" in lines
        assert lines[-1] == "OK"
        assert lines[-2].startswith("elapsed: ")

    def test_below_floor(self, capsys):
        assert main(["verify", "--max-n", "5"]) == 2


class TestHasse:
    def test_writes_dot_and_tsv(self, tmp_path, capsys):
        dot = tmp_path / "h.dot"
        tsv = tmp_path / "h.tsv"
        assert main(["hasse", "--max-n", "8", "--out", str(dot), "--tsv", str(tsv)]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out == ["nodes: 2", "edges: 1"]
        text = dot.read_text()
        assert text.startswith("digraph aft {")
        assert f'"{e7_code()}" [label="n=7"];' in text
        assert len(tsv.read_text().splitlines()) == 1

    def test_level_seven_only(self, tmp_path, capsys):
        dot = tmp_path / "h7.dot"
        assert main(["hasse", "--max-n", "7", "--out", str(dot)]) == 0
        assert capsys.readouterr().out.splitlines() == ["nodes: 1", "edges: 0"]

    def test_unwritable_path(self, capsys):
        assert main(["hasse", "--max-n", "7", "--out", "/no/such/dir/x.dot"]) == 2
