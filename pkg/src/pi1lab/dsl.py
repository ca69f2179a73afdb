"""The declarative script language: spaces, loop bindings, probes, renders.

Line-oriented; ``#`` starts a comment. Rational literals are ``num`` or
``num/den`` — decimal floats are rejected so no precision is ever lost
silently. The parser resolves names eagerly: using a name before binding
it, or binding a loop before any space is active, is a parse diagnostic
with line and column.

    space S = Y(20) width=pow10
    loop f = alpha.updown
    loop f2 = C(2).once
    loop g = concat(f2, f)
    loop w = word g2 g3^-1
    loop q = points [(0, 0, 0), (1/2, 0, 1), (1, 0, 0)]
    classify g
    dist f2 f
    probe disjointness up_to=10
    probe hausdorff up_to=20
    probe nondiscreteness n_max=32 epsilon=1/10
    probe discreteness loop=f2 trials=100 magnitude=1/1000 seed=7
    probe slsc radius=1/4 samples=50 seed=7
    render S f2 f -> scene.svg
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .words import Word, WordError, format_word, parse_word


class DslError(Exception):
    def __init__(self, line: int, col: int, message: str):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"line {line}, col {col}: {message}")


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class SpaceDecl:
    name: str
    kind: str  # "X" | "Y"
    hint: int
    width: str


@dataclass(frozen=True)
class AlphaExpr:
    pass


@dataclass(frozen=True)
class CircleExpr:
    index: int
    inverse: bool


@dataclass(frozen=True)
class ConcatExpr:
    # script form uses bound names; the CLI literal form allows nested exprs
    args: Tuple[Union[str, "LoopExpr"], ...]


@dataclass(frozen=True)
class WordExpr:
    word: Word


@dataclass(frozen=True)
class PointsExpr:
    triples: Tuple[Tuple[Fraction, Fraction, Fraction], ...]


LoopExpr = Union[AlphaExpr, CircleExpr, ConcatExpr, WordExpr, PointsExpr]


@dataclass(frozen=True)
class LoopBinding:
    name: str
    expr: LoopExpr


@dataclass(frozen=True)
class ClassifyStmt:
    name: str


@dataclass(frozen=True)
class DistStmt:
    first: str
    second: str


@dataclass(frozen=True)
class ProbeStmt:
    kind: str
    args: Tuple[Tuple[str, object], ...]


@dataclass(frozen=True)
class RenderStmt:
    names: Tuple[str, ...]
    out: str


Statement = Union[SpaceDecl, LoopBinding, ClassifyStmt, DistStmt, ProbeStmt, RenderStmt]


@dataclass(frozen=True)
class Script:
    statements: Tuple[Statement, ...]


# -- parsing ------------------------------------------------------------------

_RAT_RE = re.compile(r"^-?\d+(/\d+)?$")

PROBE_SIGNATURES = {
    "disjointness": (("up_to", "int"),),
    "hausdorff": (("up_to", "int"),),
    "nondiscreteness": (("n_max", "int"), ("epsilon", "rat")),
    "discreteness": (
        ("loop", "name"),
        ("trials", "int"),
        ("magnitude", "rat"),
        ("seed", "int?"),
    ),
    "slsc": (("radius", "rat"), ("samples", "int"), ("seed", "int?")),
}


def parse_rational(text: str, line: int, col: int) -> Fraction:
    if not _RAT_RE.match(text):
        raise DslError(line, col, f"expected a rational like 3 or 1/10, got {text!r}")
    return Fraction(text)


def _parse_loop_expr(text: str, line: int, col: int, known_loops: Optional[set]) -> LoopExpr:
    """Loop expression parser.

    With ``known_loops`` given (script mode) concat arguments must be bound
    names; with ``known_loops=None`` (CLI literal mode) concat arguments are
    themselves expressions.
    """
    text = text.strip()
    if text == "alpha.updown":
        return AlphaExpr()
    m = re.match(r"^C\(\s*(-?\d+)\s*\)\.(once|inv)$", text)
    if m:
        idx = int(m.group(1))
        if idx < 2:
            raise DslError(line, col, f"circle index must be >= 2, got C({idx})")
        return CircleExpr(idx, m.group(2) == "inv")
    if text.startswith("concat(") and text.endswith(")"):
        inner = text[len("concat(") : -1]
        parts = _split_top_level(inner)
        if not parts:
            raise DslError(line, col, "concat needs at least one argument")
        args = []
        for part in parts:
            part = part.strip()
            if known_loops is not None:
                if not re.match(r"^\w+$", part):
                    raise DslError(line, col, f"concat arguments must be loop names, got {part!r}")
                if part not in known_loops:
                    raise DslError(line, col, f"unbound loop name {part!r}")
                args.append(part)
            else:
                args.append(_parse_loop_expr(part, line, col, None))
        return ConcatExpr(tuple(args))
    if text.startswith("word(") and text.endswith(")"):
        return _word_expr(text[len("word(") : -1], line, col)
    if text.startswith("word ") or text == "word":
        return _word_expr(text[4:], line, col)
    if text.startswith("points"):
        body = text[len("points") :].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise DslError(line, col, "points expects a bracketed list of (t, x, y) triples")
        triples = []
        inner = body[1:-1].strip()
        if inner:
            for part in _split_top_level(inner):
                part = part.strip()
                m = re.match(r"^\(\s*([^\s,]+)\s*,\s*([^\s,]+)\s*,\s*([^\s,]+)\s*\)$", part)
                if not m:
                    raise DslError(line, col, f"bad points triple {part!r}")
                t, x, y = (parse_rational(m.group(i), line, col) for i in (1, 2, 3))
                triples.append((t, x, y))
        if len(triples) < 2:
            raise DslError(line, col, "points needs at least two (t, x, y) triples")
        return PointsExpr(tuple(triples))
    raise DslError(line, col, f"unrecognized loop expression {text!r}")


def _word_expr(body: str, line: int, col: int) -> WordExpr:
    try:
        return WordExpr(parse_word(body))
    except WordError as exc:
        msg = str(exc)
        if "index must be" in msg:
            msg = msg.replace("generator index", "circle index")
        raise DslError(line, col, msg) from None


def _split_top_level(text: str):
    """Split on commas not nested in parentheses or brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    tail = "".join(cur).strip()
    if tail:
        parts.append(tail)
    return parts


def parse_loop_literal(text: str) -> LoopExpr:
    """One-off loop literal (CLI form); concat arguments may nest."""
    return _parse_loop_expr(text, 1, 1, None)


def parse(text: str) -> Script:
    statements = []
    spaces: set = set()
    loops: set = set()
    active_space: Optional[SpaceDecl] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        stripped = line.strip()
        head = stripped.split(None, 1)[0]
        if head == "space":
            m = re.match(r"^space\s+(\w+)\s*=\s*([XY])\(\s*(\d+)\s*\)(?:\s+width=(\S+))?$", stripped)
            if not m:
                raise DslError(lineno, col, "expected: space <name> = X(<maxhint>)|Y(<maxhint>) [width=default|pow10|cube|uniform:<q>]")
            name, kind, hint, width = m.group(1), m.group(2), int(m.group(3)), m.group(4) or "pow10"
            if width == "default":
                width = "pow10"
            if not (width in ("pow10", "cube") or re.match(r"^uniform:-?\d+(/\d+)?$", width)):
                raise DslError(lineno, col, f"unknown width profile {width!r}")
            if hint < 2:
                raise DslError(lineno, col, "space maxhint must be at least 2")
            decl = SpaceDecl(name, kind, hint, width)
            statements.append(decl)
            spaces.add(name)
            active_space = decl
        elif head == "loop":
            m = re.match(r"^loop\s+(\w+)\s*=\s*(.+)$", stripped)
            if not m:
                raise DslError(lineno, col, "expected: loop <name> = <expression>")
            if active_space is None:
                raise DslError(lineno, col, "no active space: declare one with 'space' first")
            name = m.group(1)
            expr = _parse_loop_expr(m.group(2), lineno, col, loops)
            if isinstance(expr, AlphaExpr) and active_space.kind != "Y":
                raise DslError(lineno, col, "alpha.updown needs the compact space Y")
            statements.append(LoopBinding(name, expr))
            loops.add(name)
        elif head == "classify":
            m = re.match(r"^classify\s+(\w+)$", stripped)
            if not m:
                raise DslError(lineno, col, "expected: classify <loop-name>")
            if m.group(1) not in loops:
                raise DslError(lineno, col, f"unbound loop name {m.group(1)!r}")
            statements.append(ClassifyStmt(m.group(1)))
        elif head == "dist":
            m = re.match(r"^dist\s+(\w+)\s+(\w+)$", stripped)
            if not m:
                raise DslError(lineno, col, "expected: dist <loop-name> <loop-name>")
            for nm in (m.group(1), m.group(2)):
                if nm not in loops:
                    raise DslError(lineno, col, f"unbound loop name {nm!r}")
            statements.append(DistStmt(m.group(1), m.group(2)))
        elif head == "probe":
            m = re.match(r"^probe\s+(\w+)((?:\s+\w+=\S+)*)$", stripped)
            if not m:
                raise DslError(lineno, col, "expected: probe <kind> key=value ...")
            kind = m.group(1)
            if kind not in PROBE_SIGNATURES:
                raise DslError(
                    lineno, col, f"unknown probe {kind!r}; known: {', '.join(sorted(PROBE_SIGNATURES))}"
                )
            if active_space is None:
                raise DslError(lineno, col, "no active space: declare one with 'space' first")
            raw_args = dict(
                kv.split("=", 1) for kv in m.group(2).split() if kv
            )
            args = []
            for key, typ in PROBE_SIGNATURES[kind]:
                optional = typ.endswith("?")
                typ = typ.rstrip("?")
                if key not in raw_args:
                    if optional:
                        continue
                    raise DslError(lineno, col, f"probe {kind} needs {key}=...")
                val = raw_args.pop(key)
                if typ == "int":
                    if not re.match(r"^-?\d+$", val):
                        raise DslError(lineno, col, f"{key} must be an integer, got {val!r}")
                    args.append((key, int(val)))
                elif typ == "rat":
                    args.append((key, parse_rational(val, lineno, col)))
                else:  # name
                    if val not in loops:
                        raise DslError(lineno, col, f"unbound loop name {val!r}")
                    args.append((key, val))
            if raw_args:
                stray = sorted(raw_args)[0]
                raise DslError(lineno, col, f"probe {kind} does not take {stray!r}")
            statements.append(ProbeStmt(kind, tuple(args)))
        elif head == "render":
            m = re.match(r"^render\s+((?:\w+\s+)*\w+)\s*->\s*(\S+)$", stripped)
            if not m:
                raise DslError(lineno, col, "expected: render <names> -> <file>")
            names = tuple(m.group(1).split())
            for nm in names:
                if nm not in loops and nm not in spaces:
                    raise DslError(lineno, col, f"unbound name {nm!r}")
            statements.append(RenderStmt(names, m.group(2)))
        else:
            raise DslError(lineno, col, f"unrecognized statement {head!r}")
    return Script(tuple(statements))


# -- pretty printing ------------------------------------------------------------


def format_expr(expr: LoopExpr) -> str:
    if isinstance(expr, AlphaExpr):
        return "alpha.updown"
    if isinstance(expr, CircleExpr):
        return f"C({expr.index}).{'inv' if expr.inverse else 'once'}"
    if isinstance(expr, ConcatExpr):
        inner = ", ".join(a if isinstance(a, str) else format_expr(a) for a in expr.args)
        return f"concat({inner})"
    if isinstance(expr, WordExpr):
        return f"word {format_word(expr.word)}"
    if isinstance(expr, PointsExpr):
        triples = ", ".join(f"({t}, {x}, {y})" for t, x, y in expr.triples)
        return f"points [{triples}]"
    raise TypeError(f"not a loop expression: {expr!r}")


def format_script(script: Script) -> str:
    lines = []
    for st in script.statements:
        if isinstance(st, SpaceDecl):
            lines.append(f"space {st.name} = {st.kind}({st.hint}) width={st.width}")
        elif isinstance(st, LoopBinding):
            lines.append(f"loop {st.name} = {format_expr(st.expr)}")
        elif isinstance(st, ClassifyStmt):
            lines.append(f"classify {st.name}")
        elif isinstance(st, DistStmt):
            lines.append(f"dist {st.first} {st.second}")
        elif isinstance(st, ProbeStmt):
            args = " ".join(f"{k}={v}" for k, v in st.args)
            lines.append(f"probe {st.kind} {args}".rstrip())
        elif isinstance(st, RenderStmt):
            lines.append(f"render {' '.join(st.names)} -> {st.out}")
        else:
            raise TypeError(f"not a statement: {st!r}")
    return "\n".join(lines) + ("\n" if lines else "")
