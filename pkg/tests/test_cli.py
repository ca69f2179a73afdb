import re

from pi1lab.cli import demo_whitehead, main

GOOD_SCRIPT = """\
space S = Y(10) width=pow10
loop f = alpha.updown
loop f4 = C(4).once
loop g = concat(f4, f)
classify f4
classify g
probe disjointness up_to=6
render S f4 -> {out}
"""

SABOTAGE_SCRIPT = """\
space S = X(6) width=uniform:1/2
probe disjointness up_to=4
"""


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRun:
    def test_script_classifies(self, capsys, tmp_path):
        script = tmp_path / "scene.pi1"
        out_svg = tmp_path / "scene.svg"
        script.write_text(GOOD_SCRIPT.format(out=out_svg), encoding="utf-8")
        code, out, err = run_cli(capsys, ["run", str(script)])
        assert code == 0, err
        assert "word: g4" in out
        assert out_svg.exists()

    def test_sabotage_disjointness_fails_nonzero(self, capsys, tmp_path):
        script = tmp_path / "bad.pi1"
        script.write_text(SABOTAGE_SCRIPT, encoding="utf-8")
        code, out, _ = run_cli(capsys, ["run", str(script)])
        assert code == 1
        assert "verdict: FAIL" in out

    def test_parse_error_exit_2(self, capsys, tmp_path):
        script = tmp_path / "broken.pi1"
        script.write_text("loop f = C(1).once\n", encoding="utf-8")
        code, _, err = run_cli(capsys, ["run", str(script)])
        assert code == 2
        assert "parse error" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, ["run", "/nonexistent/script.pi1"])
        assert code == 1
        assert "error" in err


class TestOneOffCommands:
    def test_word_circle(self, capsys):
        code, out, _ = run_cli(capsys, ["word", "C(4).once"])
        assert code == 0 and out.strip() == "word: g4"

    def test_word_literal_with_spaces(self, capsys):
        code, out, _ = run_cli(capsys, ["word", "word", "g2", "g3^-1"])
        assert code == 0 and out.strip() == "word: g2 g3^-1"

    def test_word_alpha_identity(self, capsys):
        code, out, _ = run_cli(capsys, ["word", "alpha.updown"])
        assert code == 0 and out.strip() == "word: 1"

    def test_word_parse_error(self, capsys):
        code, _, err = run_cli(capsys, ["word", "C(1).once"])
        assert code == 2 and "circle index" in err

    def test_dist(self, capsys):
        code, out, _ = run_cli(capsys, ["dist", "C(2).once", "alpha.updown"])
        assert code == 0
        assert out.startswith("dist_sq: ")
        m = re.search(r"dist_dec\(\d+\): ([0-9.]+)", out)
        assert m and m.group(1).startswith("0.5000000000000000000200000")

    def test_hausdorff(self, capsys):
        code, out, _ = run_cli(capsys, ["hausdorff", "--upto", "6"])
        assert code == 0
        assert "== probe: hausdorff-convergence ==" in out
        assert "verdict: PASS" in out


class TestRender:
    def test_render_skips_probes(self, capsys, tmp_path):
        script = tmp_path / "scene.pi1"
        out_svg = tmp_path / "scene.svg"
        script.write_text(
            "space S = Y(6)\nloop f = alpha.updown\nprobe disjointness up_to=4\n"
            f"render S f -> {out_svg}\n",
            encoding="utf-8",
        )
        code, out, _ = run_cli(capsys, ["render", str(script)])
        assert code == 0
        assert "== probe:" not in out
        assert out_svg.exists()

    def test_render_requires_directive(self, capsys, tmp_path):
        script = tmp_path / "empty.pi1"
        script.write_text("space S = Y(6)\n", encoding="utf-8")
        code, _, err = run_cli(capsys, ["render", str(script)])
        assert code == 2 and "render directive" in err


class TestDemo:
    def test_unknown_demo(self, capsys):
        code, _, err = run_cli(capsys, ["demo", "mystery"])
        assert code == 2 and "unknown demo" in err

    def test_small_demo_deterministic(self, tmp_path):
        # nmax must exceed 10 for the nondiscreteness tail to drop below 1/10
        d1 = tmp_path / "a"
        d2 = tmp_path / "b"
        d1.mkdir()
        d2.mkdir()
        code1, text1 = demo_whitehead(nmax=12, seed=7, out_dir=str(d1))
        code2, text2 = demo_whitehead(nmax=12, seed=7, out_dir=str(d2))
        assert code1 == code2 == 0
        assert text1.replace(str(d1), "@") == text2.replace(str(d2), "@")
        assert (d1 / "whitehead.svg").read_bytes() == (d2 / "whitehead.svg").read_bytes()

    def test_demo_summary_structure(self, tmp_path):
        code, text = demo_whitehead(nmax=12, seed=1, out_dir=str(tmp_path))
        assert code == 0
        assert "== summary ==" in text
        for label in (
            "disjointness",
            "hausdorff_convergence",
            "isomorphism_roundtrip",
            "nondiscreteness_Y",
            "discreteness_X",
            "slsc_Y",
        ):
            assert f"{label}: PASS" in text
        assert "headline:" in text and text.rstrip().endswith("verdict: PASS")
