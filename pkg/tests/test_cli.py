"""Command-line interface: subcommands, sources, exit codes, JSON shape."""

import json

import pytest

from morsewidth.cli import main

TREFOIL = "b1 b2 x3- x3- x3- d2 d1"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_literal_word(self, capsys):
        code, out, _ = run(capsys, "analyze", TREFOIL)
        assert code == 0
        data = json.loads(out)
        assert data["width"] == 8
        assert data["trunk"] == 4
        assert data["bridge"] == 2
        assert data["otp_vector"] == [4]
        assert data["proportion"] == {"num": 1, "den": 1}
        assert {"width": 4, "class": "thick"} in data["gaps"]

    def test_report_key_order(self, capsys):
        _, out, _ = run(capsys, "analyze", "catalog:trefoil_plat")
        pairs = json.loads(out, object_pairs_hook=lambda kv: kv)
        keys = [k for k, _ in pairs]
        assert keys == [
            "width",
            "trunk",
            "height",
            "bridge",
            "critical_count",
            "otp_vector",
            "proportion",
            "average_trunk",
            "rep_upper",
            "waist_upper",
            "gaps",
        ]

    def test_catalog_source(self, capsys):
        code, out, _ = run(capsys, "analyze", "catalog:figure8_plat")
        assert code == 0
        assert json.loads(out)["width"] == 18

    def test_profile_source(self, capsys):
        code, out, _ = run(capsys, "analyze", "profile:2,4,6,4,2")
        assert code == 0
        assert json.loads(out)["width"] == 18

    def test_file_source(self, capsys, tmp_path):
        path = tmp_path / "word.mw"
        path.write_text(TREFOIL + "\n", encoding="utf-8")
        code, out, _ = run(capsys, "analyze", str(path))
        assert code == 0
        assert json.loads(out)["width"] == 8

    def test_tangle_report(self, capsys):
        code, out, _ = run(capsys, "analyze", "catalog:rational_tangle")
        assert code == 0
        data = json.loads(out)
        assert data == {"boundary_strands": 4, "trunk": 4, "arc_count": 2}


class TestOptimize:
    def test_padded_trefoil_default(self, capsys):
        code, out, _ = run(capsys, "optimize", "catalog:padded_trefoil")
        assert code == 0
        data = json.loads(out)
        assert data["input"]["report"]["width"] == 18
        assert data["best"]["report"]["width"] == 8
        assert data["trace"] == ["ZigZagCancel@2"]
        assert data["visited"] > 0

    def test_objective_flag(self, capsys):
        code, out, _ = run(
            capsys, "optimize", "catalog:padded_trefoil",
            "--objective", "otp", "--steps", "4",
        )
        assert code == 0
        assert json.loads(out)["best"]["report"]["otp_vector"] == [4]

    def test_tangle_refused(self, capsys):
        code, _, err = run(capsys, "optimize", "catalog:rational_tangle")
        assert code == 1
        assert "closed word" in err


class TestSumCompareBracket:
    def test_sum(self, capsys):
        code, out, _ = run(capsys, "sum", "catalog:trefoil_plat", "catalog:trefoil_plat")
        assert code == 0
        data = json.loads(out)
        assert data["report"]["width"] == 14
        assert data["report"]["bridge"] == 3

    def test_compare(self, capsys):
        code, out, _ = run(
            capsys, "compare", "catalog:trefoil_plat", "catalog:padded_trefoil"
        )
        assert code == 0
        assert out.strip() == "less"

    def test_compare_equal(self, capsys):
        _, out, _ = run(capsys, "compare", TREFOIL, "catalog:trefoil_plat")
        assert out.strip() == "equal"

    def test_bracket(self, capsys):
        code, out, _ = run(capsys, "bracket", "catalog:trefoil_plat")
        assert code == 0
        data = json.loads(out)
        assert data["crossings"] == 3
        assert data["writhe"] == -3
        assert data["bracket"] == "A^7 - A^3 - A^-5"
        assert data["jones_normalized"] == "-A^16 + A^12 + A^4"


class TestCatalogRender:
    def test_catalog_list(self, capsys):
        code, out, _ = run(capsys, "catalog")
        assert code == 0
        assert "trefoil_plat" in out
        assert "torus_plat(p,q)" in out

    def test_catalog_print(self, capsys):
        code, out, _ = run(capsys, "catalog", "trefoil_plat")
        assert code == 0
        assert out.strip() == TREFOIL

    def test_render_ascii(self, capsys):
        code, out, _ = run(capsys, "render", TREFOIL)
        assert code == 0
        assert out == "thick   4 ####\n"

    def test_render_svg(self, capsys):
        code, out, _ = run(capsys, "render", TREFOIL, "--format", "svg")
        assert code == 0
        assert out.startswith("<svg") and out.rstrip().endswith("</svg>")


class TestExitCodes:
    def test_syntax_error_is_2(self, capsys):
        code, _, err = run(capsys, "analyze", "b1 q9 d1")
        assert code == 2
        assert "syntax error" in err
        assert "line 1" in err

    def test_validation_error_is_1(self, capsys):
        code, _, err = run(capsys, "analyze", "b1 b1 d1")
        assert code == 1
        assert "invalid input" in err

    def test_unknown_catalog_is_1(self, capsys):
        code, _, err = run(capsys, "analyze", "catalog:nope")
        assert code == 1
        assert "no catalog entry" in err

    def test_bad_profile_is_1(self, capsys):
        code, _, err = run(capsys, "analyze", "profile:2,4,x")
        assert code == 1

    def test_budget_exceeded_is_3(self, capsys):
        word = " ".join(["b1", "b2"] + ["x3-"] * 19 + ["d2", "d1"])
        code, _, err = run(capsys, "bracket", word)
        assert code == 3
        assert "budget exceeded" in err

    def test_link_refused_by_bracket_command(self, capsys):
        code, _, err = run(capsys, "bracket", "b1 b1 d1 d1")
        assert code == 1
