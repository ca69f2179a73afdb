"""The pi1lab command line.

Subcommands:

    pi1lab run <script>            execute a script (use '-' for stdin)
    pi1lab demo whitehead          the full pipeline: disjointness, Hausdorff
                                   table, isomorphism round trips, the three
                                   probes, a summary verdict and an SVG scene
    pi1lab word <loop-literal>     classify a one-off loop literal
    pi1lab dist <loop> <loop>      exact sup distance between two literals
    pi1lab hausdorff --upto K      the Hausdorff convergence table
    pi1lab render <script>         execute only bindings and render directives

Exit codes: 0 success / all PASS, 1 any FAIL verdict or runtime error,
2 usage or parse errors. One-off literals are evaluated in the compact
space Y with the default width profile. PI1LAB_DIGITS sets report decimal
places (default 40).
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import dsl
from .geometry import GeometryError, sup_distance
from .loops import (
    Loop,
    LoopError,
    concatenate_all,
    constant_loop,
    loop_from_breakpoints,
    realize_word,
    reverse,
    standard_f,
    standard_fn,
    validate,
)
from .pi1 import (
    ProbeParameterError,
    classify,
    probe_discreteness_x,
    probe_isomorphism_roundtrip,
    probe_nondiscreteness_y,
    probe_slsc_y,
)
from .report import FAIL, ProbeReport, report_digits
from .spaces import (
    SpaceError,
    SpaceHandle,
    SpaceKind,
    compact_y,
    default_y,
    hausdorff_convergence,
    profile_by_name,
    verify_disjointness,
)
from .svg import write_scene
from .words import WordError, format_word, parse_word

RunError = (GeometryError, LoopError, SpaceError, ProbeParameterError, WordError, OSError)


class _Runner:
    """Executes a parsed script; collects output text and a verdict flag."""

    def __init__(self, bindings_only: bool = False):
        self.spaces: Dict[str, SpaceHandle] = {}
        self.loops: Dict[str, Loop] = {}
        self.active: Optional[SpaceHandle] = None
        self.out: List[str] = []
        self.failed = False
        self.rendered = 0
        self.bindings_only = bindings_only

    def emit(self, text: str) -> None:
        self.out.append(text)

    def emit_report(self, rep: ProbeReport) -> None:
        self.emit(rep.render().rstrip("\n"))
        if rep.verdict == FAIL:
            self.failed = True

    def eval_expr(self, expr, space: SpaceHandle) -> Loop:
        if isinstance(expr, dsl.AlphaExpr):
            return standard_f(space)
        if isinstance(expr, dsl.CircleExpr):
            lp = standard_fn(expr.index, space)
            return reverse(lp) if expr.inverse else lp
        if isinstance(expr, dsl.ConcatExpr):
            parts = [
                self.loops[a] if isinstance(a, str) else self.eval_expr(a, space)
                for a in expr.args
            ]
            return concatenate_all(parts)
        if isinstance(expr, dsl.WordExpr):
            return realize_word(expr.word, space)
        if isinstance(expr, dsl.PointsExpr):
            lp = loop_from_breakpoints(expr.triples, space)
            violation = validate(lp)
            if violation is not None:
                raise LoopError(f"invalid loop: {violation}")
            return lp
        raise TypeError(f"not a loop expression: {expr!r}")

    def run(self, script: dsl.Script) -> int:
        for st in script.statements:
            if isinstance(st, dsl.SpaceDecl):
                profile = profile_by_name(st.width)
                kind = SpaceKind.BOUQUET_X if st.kind == "X" else SpaceKind.COMPACT_Y
                handle = SpaceHandle(kind, profile, st.hint)
                self.spaces[st.name] = handle
                self.active = handle
            elif isinstance(st, dsl.LoopBinding):
                self.loops[st.name] = self.eval_expr(st.expr, self.active)
            elif isinstance(st, dsl.ClassifyStmt):
                if self.bindings_only:
                    continue
                cls = classify(self.loops[st.name])
                self.emit(f"word: {format_word(cls.word)}")
            elif isinstance(st, dsl.DistStmt):
                if self.bindings_only:
                    continue
                a, b = self.loops[st.first], self.loops[st.second]
                d = sup_distance(a.path, b.path)
                digits = report_digits()
                self.emit(f"dist_sq: {d.squared}\ndist_dec({digits}): {d.decimal(digits)}")
            elif isinstance(st, dsl.ProbeStmt):
                if self.bindings_only:
                    continue
                self.emit_report(self._run_probe(st))
            elif isinstance(st, dsl.RenderStmt):
                spaces = []
                loops = []
                for name in st.names:
                    if name in self.spaces:
                        handle = self.spaces[name]
                        spaces.append((handle, handle.hint))
                    else:
                        loops.append(self.loops[name])
                write_scene(st.out, spaces, loops)
                self.emit(f"wrote {st.out}")
                self.rendered += 1
            else:
                raise TypeError(f"not a statement: {st!r}")
        return 1 if self.failed else 0

    def _run_probe(self, st: dsl.ProbeStmt) -> ProbeReport:
        args = dict(st.args)
        space = self.active
        if st.kind == "disjointness":
            return verify_disjointness(space, args["up_to"])
        if st.kind == "hausdorff":
            return hausdorff_convergence(space, args["up_to"])
        if st.kind == "nondiscreteness":
            return probe_nondiscreteness_y(args["n_max"], args["epsilon"], space)
        if st.kind == "discreteness":
            return probe_discreteness_x(
                self.loops[args["loop"]],
                args["trials"],
                args["magnitude"],
                args.get("seed", 0),
            )
        if st.kind == "slsc":
            return probe_slsc_y(args["radius"], args["samples"], args.get("seed", 0), space)
        raise ValueError(f"unhandled probe kind {st.kind!r}")


def _read_script(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_run(args, bindings_only: bool = False) -> int:
    try:
        text = _read_script(args.script)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        script = dsl.parse(text)
    except dsl.DslError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    if bindings_only and not any(isinstance(st, dsl.RenderStmt) for st in script.statements):
        print("error: script has no render directive", file=sys.stderr)
        return 2
    runner = _Runner(bindings_only=bindings_only)
    try:
        code = runner.run(script)
    except RunError as exc:
        if runner.out:
            print("\n\n".join(runner.out))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if runner.out:
        print("\n\n".join(runner.out))
    return code


def _one_off_loop(literal: str) -> Loop:
    expr = dsl.parse_loop_literal(literal)
    runner = _Runner()
    return runner.eval_expr(expr, default_y())


def _cmd_word(args) -> int:
    literal = " ".join(args.literal)
    try:
        lp = _one_off_loop(literal)
        cls = classify(lp)
    except dsl.DslError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except RunError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"word: {format_word(cls.word)}")
    return 0


def _cmd_dist(args) -> int:
    try:
        a = _one_off_loop(args.first)
        b = _one_off_loop(args.second)
    except dsl.DslError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except RunError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    d = sup_distance(a.path, b.path)
    digits = report_digits()
    print(f"dist_sq: {d.squared}")
    print(f"dist_dec({digits}): {d.decimal(digits)}")
    return 0


def _cmd_hausdorff(args) -> int:
    try:
        rep = hausdorff_convergence(default_y(), args.upto)
    except RunError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(rep.render().rstrip("\n"))
    return 0 if rep.passed else 1


def demo_whitehead(nmax: int = 32, seed: int = 0, out_dir: str = ".") -> Tuple[int, str]:
    """The full pipeline; returns (exit_code, report_text) and writes the scene SVG."""
    y = compact_y(hint=max(nmax, 20))
    x = y.sibling(SpaceKind.BOUQUET_X)
    blocks: List[str] = []
    summary: List[Tuple[str, bool]] = []

    def add(rep: ProbeReport, label: str, bucket: Optional[List[bool]] = None) -> None:
        blocks.append(rep.render().rstrip("\n"))
        if bucket is None:
            summary.append((label, rep.passed))
        else:
            bucket.append(rep.passed)

    add(verify_disjointness(y, 20), "disjointness")
    add(hausdorff_convergence(y, 20), "hausdorff_convergence")
    add(probe_isomorphism_roundtrip(100, 10, seed, y), "isomorphism_roundtrip")
    add(probe_nondiscreteness_y(nmax, Fraction(1, 10), y), "nondiscreteness_Y")
    corpus = [
        constant_loop(x),
        standard_fn(2, x),
        standard_fn(3, x),
        realize_word(parse_word("g2 g3"), x),
        realize_word(parse_word("g2^2 g5^-1"), x),
    ]
    discr: List[bool] = []
    for i, lp in enumerate(corpus):
        add(probe_discreteness_x(lp, 100, Fraction(1, 1000), seed + i), "discreteness_X", discr)
    summary.append(("discreteness_X", all(discr)))
    add(probe_slsc_y(Fraction(1, 4), 50, seed, y), "slsc_Y")

    svg_path = os.path.join(out_dir, "whitehead.svg")
    write_scene(
        svg_path,
        [(y, 8)],
        [standard_f(y), standard_fn(5, y)],
    )
    blocks.append(f"wrote {svg_path}")

    all_pass = all(ok for _, ok in summary)
    lines = ["== summary =="]
    for label, ok in summary:
        lines.append(f"{label}: {'PASS' if ok else 'FAIL'}")
    lines.append(
        "headline: pi1(X) and pi1(Y) are isomorphic as groups yet not homeomorphic "
        "as topological groups, so X and Y have distinct homotopy types: "
        + ("PASS" if all_pass else "FAIL")
    )
    lines.append(f"verdict: {'PASS' if all_pass else 'FAIL'}")
    blocks.append("\n".join(lines))
    return (0 if all_pass else 1), "\n\n".join(blocks)


def _cmd_demo(args) -> int:
    if args.what != "whitehead":
        print(f"error: unknown demo {args.what!r}; try 'whitehead'", file=sys.stderr)
        return 2
    try:
        code, text = demo_whitehead(args.nmax, args.seed, args.out_dir)
    except RunError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(text)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pi1lab",
        description="exact loop classification on a planar triangle bouquet and its compactification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a script")
    p_run.add_argument("script", help="script path, or - for stdin")

    p_demo = sub.add_parser("demo", help="run a built-in pipeline")
    p_demo.add_argument("what", help="demo name (whitehead)")
    p_demo.add_argument("--nmax", type=int, default=32, help="largest circle index for the nondiscreteness table")
    p_demo.add_argument("--seed", type=int, default=0, help="seed for all randomized probes")
    p_demo.add_argument("--out-dir", default=".", help="directory for the scene SVG")

    p_word = sub.add_parser("word", help="classify a loop literal")
    p_word.add_argument("literal", nargs="+", help="e.g. 'C(4).once' or 'word g2 g3^-1'")

    p_dist = sub.add_parser("dist", help="exact sup distance between two loop literals")
    p_dist.add_argument("first")
    p_dist.add_argument("second")

    p_h = sub.add_parser("hausdorff", help="Hausdorff convergence table")
    p_h.add_argument("--upto", type=int, required=True)

    p_render = sub.add_parser("render", help="execute only bindings and render directives")
    p_render.add_argument("script", help="script path, or - for stdin")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "render":
        return _cmd_run(args, bindings_only=True)
    if args.command == "demo":
        return _cmd_demo(args)
    if args.command == "word":
        return _cmd_word(args)
    if args.command == "dist":
        return _cmd_dist(args)
    if args.command == "hausdorff":
        return _cmd_hausdorff(args)
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
