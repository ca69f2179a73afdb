"""Based PL loops in the bouquet X or its compactification Y.

A loop is a PLPath based at p = (0,0) whose every linear piece lies inside
a single edge of the carrying space; this is checked exactly. Because every
edge of the construction has p as an extreme point, a valid loop meets p
only at breakpoints, so the decomposition into maximal excursions away from
p is a pure breakpoint scan. Winding degrees are computed by lifting the
combinatorial (edge, fraction-along-edge) chart sequence, never by numeric
arc length.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from . import kernels
from .geometry import ORIGIN, PLPath, Point2, pl_path
from .spaces import (
    ALPHA_EDGE,
    ComponentId,
    EdgeRef,
    SpaceError,
    SpaceHandle,
    SpaceKind,
    default_x,
    default_y,
    edge_is_base_incident,
)
from .words import Word


class LoopError(Exception):
    pass


class InvalidLoopError(LoopError):
    """Raised by operations that require a valid loop."""


class SpaceMismatchError(LoopError):
    """Two loops from different spaces were combined."""


class WindingError(LoopError):
    """Winding degree was requested for a non-circle excursion."""


@dataclass(frozen=True)
class Loop:
    """A based PL loop together with its carrying space."""

    path: PLPath
    space: SpaceHandle

    def __post_init__(self):
        if not isinstance(self.path, PLPath):
            raise LoopError("Loop.path must be a PLPath")


@dataclass(frozen=True)
class Violation:
    """First offending piece of an invalid loop, with its parameter interval."""

    piece_index: int
    t_start: Fraction
    t_end: Fraction
    reason: str

    def __str__(self) -> str:
        return f"piece {self.piece_index} on [{self.t_start}, {self.t_end}]: {self.reason}"


@dataclass(frozen=True)
class Excursion:
    """A maximal sub-loop away from the base point.

    ``subpath`` is renormalized to [0, 1] and starts and ends at p;
    ``t_start``/``t_end`` record the original parameter interval. The
    component tag names the unique component of (space minus p) carrying
    the excursion's interior.
    """

    t_start: Fraction
    t_end: Fraction
    component: ComponentId
    subpath: PLPath
    piece_edges: Tuple[Optional[EdgeRef], ...]
    space: SpaceHandle


def _edge_sort_key(ref: EdgeRef):
    return (0, 0, 0) if ref == ALPHA_EDGE else (1, ref[1], ref[2])


def _piece_edge(space: SpaceHandle, p0: Point2, p1: Point2) -> Optional[EdgeRef]:
    """The unique space edge containing the open piece p0 -> p1, or None."""
    anchor, other = (p0, p1) if p0 != ORIGIN else (p1, p0)
    candidates = space.edges_containing(anchor)
    if other == ORIGIN:
        hits = [ref for ref in candidates if edge_is_base_incident(ref)]
    else:
        hits = [ref for ref in candidates if space.edge_segment(ref).contains(other)]
    if not hits:
        return None
    return sorted(hits, key=_edge_sort_key)[0]


def _analyze(loop: Loop) -> Tuple[Optional[EdgeRef], ...]:
    """Per-piece edge assignment; raises InvalidLoopError on the first violation."""
    v = _first_violation(loop)
    if isinstance(v, Violation):
        raise InvalidLoopError(str(v))
    return v


def _first_violation(loop: Loop):
    bks = loop.path.breakpoints
    if bks[0][1] != ORIGIN:
        return Violation(0, bks[0][0], bks[0][0], f"loop starts at {bks[0][1]}, not at p")
    if bks[-1][1] != ORIGIN:
        return Violation(
            len(bks) - 2, bks[-1][0], bks[-1][0], f"loop ends at {bks[-1][1]}, not at p"
        )
    edges = []
    for i, ((t0, p0), (t1, p1)) in enumerate(loop.path.pieces()):
        if p0 == p1:
            if p0 != ORIGIN and loop.space.membership(p0).kind == "outside":
                return Violation(i, t0, t1, f"stationary point {p0} is outside the space")
            edges.append(None)
            continue
        for q in (p0, p1):
            if q != ORIGIN and not loop.space.edges_containing(q):
                return Violation(i, t0, t1, f"breakpoint {q} is outside the space")
        ref = _piece_edge(loop.space, p0, p1)
        if ref is None:
            return Violation(
                i, t0, t1, f"piece {p0} -> {p1} is not contained in a single edge"
            )
        edges.append(ref)
    return tuple(edges)


def validate(loop: Loop) -> Optional[Violation]:
    """None when the loop is valid; otherwise the first violating piece."""
    v = _first_violation(loop)
    return v if isinstance(v, Violation) else None


def is_valid(loop: Loop) -> bool:
    return validate(loop) is None


def _component_of_edge(ref: EdgeRef) -> ComponentId:
    if ref == ALPHA_EDGE:
        return ComponentId.alpha()
    return ComponentId.circle(ref[1])


def decompose(loop: Loop) -> Tuple[Excursion, ...]:
    """Maximal excursions away from p, in parameter order.

    Constant-at-p stretches produce no excursion. Each excursion is tagged
    with the unique component of (space minus p) carrying it.
    """
    edges = _analyze(loop)
    bks = loop.path.breakpoints
    p_idx = [i for i, (_, q) in enumerate(bks) if q == ORIGIN]
    out = []
    for i, j in zip(p_idx, p_idx[1:]):
        if j == i + 1:
            continue
        piece_edges = edges[i:j]
        comps = {
            _component_of_edge(ref) for ref in piece_edges if ref is not None
        }
        if len(comps) != 1:
            raise InvalidLoopError(
                f"excursion on [{bks[i][0]}, {bks[j][0]}] spans components {sorted(map(str, comps))}"
            )
        t0, t1 = bks[i][0], bks[j][0]
        span = t1 - t0
        sub = PLPath(tuple(((t - t0) / span, q) for t, q in bks[i : j + 1]))
        out.append(Excursion(t0, t1, comps.pop(), sub, piece_edges, loop.space))
    return tuple(out)


def _param_on_edge(q: Point2, edge) -> Fraction:
    n, d = kernels.foot_param(q.quad(), edge.a.quad(), edge.b.quad())
    return Fraction(n, d)


def winding_degree(exc: Excursion) -> int:
    """Signed number of full traversals of the excursion around its circle.

    The excursion's points are charted as j + u, with j the edge index in
    the positive cycle p -> B -> D -> p and u the exact fraction along that
    edge; the chart sequence lifts to the real line and the degree is the
    lifted displacement divided by 3. Everything is rational, so the result
    depends only on the combinatorial edge-crossing sequence.
    """
    if exc.component.kind != "circle":
        raise WindingError("winding degree is defined only for circle excursions")
    circ = exc.space.circle(exc.component.index)
    theta = None
    start = None
    for ((_, p0), (_, p1)), ref in zip(exc.subpath.pieces(), exc.piece_edges):
        if ref is None:
            continue
        j = ref[2]
        edge = circ.edges[j]
        u0 = _param_on_edge(p0, edge)
        u1 = _param_on_edge(p1, edge)
        if theta is None:
            theta = Fraction(j) + u0
            start = theta
        else:
            if (Fraction(j) + u0 - theta) % 3 != 0:
                raise InvalidLoopError("discontinuous chart sequence in excursion")
        theta += u1 - u0
    if theta is None:
        return 0
    disp = theta - start
    if disp % 3 != 0:
        raise InvalidLoopError("excursion lift does not close up at p")
    return int(disp / 3)


def loop_from_breakpoints(raw: Sequence, space: SpaceHandle) -> Loop:
    """Loop from (t, x, y) rational triples."""
    return Loop(pl_path(raw), space)


def constant_loop(space: SpaceHandle) -> Loop:
    return Loop(PLPath(((Fraction(0), ORIGIN), (Fraction(1), ORIGIN))), space)


def standard_f(space: Optional[SpaceHandle] = None) -> Loop:
    """The up-and-down traversal of alpha: p to (0,1) at half time, then back."""
    space = space if space is not None else default_y()
    if not space.has_alpha:
        raise SpaceError("the alpha loop lives in the compact space Y")
    top = space.alpha_segment.b
    return Loop(
        PLPath(((Fraction(0), ORIGIN), (Fraction(1, 2), top), (Fraction(1), ORIGIN))), space
    )


def standard_fn(n: int, space: Optional[SpaceHandle] = None) -> Loop:
    """One positive traversal of C_n, parametrized to shadow the alpha loop.

    The apex B_n is reached at t = 1/2 exactly like the alpha loop reaches
    (0,1); the cap B_n -> D_n is crossed on [1/2, (1+w)/2] so that during
    the descent the y-coordinates of this loop and the alpha loop agree
    identically. That makes sup_distance(f_n, f) exactly 1/n + n*w(n).
    """
    space = space if space is not None else default_x()
    circ = space.circle(n)
    w = space.profile(n)
    return Loop(
        PLPath(
            (
                (Fraction(0), ORIGIN),
                (Fraction(1, 2), circ.apex),
                (Fraction(1 + w, 2), circ.tail),
                (Fraction(1), ORIGIN),
            )
        ),
        space,
    )


def concatenate(a: Loop, b: Loop) -> Loop:
    """Half-speed concatenation: a on [0, 1/2], b on [1/2, 1]."""
    if a.space != b.space:
        raise SpaceMismatchError("cannot concatenate loops from different spaces")
    bks = [(t / 2, q) for t, q in a.path.breakpoints]
    bks.extend((Fraction(1, 2) + t / 2, q) for t, q in b.path.breakpoints[1:])
    return Loop(PLPath(tuple(bks)), a.space)


def concatenate_all(loops: Sequence[Loop]) -> Loop:
    if not loops:
        raise LoopError("need at least one loop")
    out = loops[0]
    for nxt in loops[1:]:
        out = concatenate(out, nxt)
    return out


def reverse(a: Loop) -> Loop:
    return Loop(a.path.reversed(), a.space)


def realize_word(w: Word, space: Optional[SpaceHandle] = None) -> Loop:
    """A loop in X whose excursion sequence spells the word letter by letter."""
    space = space if space is not None else default_x()
    letters = list(w.letters())
    if not letters:
        return constant_loop(space)
    total = len(letters)
    bks = [(Fraction(0), ORIGIN)]
    for k, (n, sgn) in enumerate(letters):
        base = standard_fn(n, space).path
        if sgn < 0:
            base = base.reversed()
        for t, q in base.breakpoints[1:]:
            bks.append((Fraction(k + t, total), q))
    return Loop(PLPath(tuple(bks)), space)


def transplant(loop: Loop, space: SpaceHandle) -> Loop:
    """The same path carried by another space handle (e.g. inclusion X -> Y)."""
    return Loop(loop.path, space)


def include_in_y(loop: Loop) -> Loop:
    """Inclusion of an X loop into the compactification Y."""
    if loop.space.kind is SpaceKind.COMPACT_Y:
        return loop
    return transplant(loop, loop.space.sibling(SpaceKind.COMPACT_Y))


def reparametrize(loop: Loop, pairs: Sequence) -> Loop:
    """Precompose with a monotone PL bijection of [0, 1].

    ``pairs`` lists (s, t) breakpoints of the bijection s -> t with both
    coordinates increasing from 0 to 1; the result traverses the same image
    with the same orientation, so excursion components and winding degrees
    are unchanged.
    """
    pairs = [(Fraction(s), Fraction(t)) for s, t in pairs]
    if pairs[0] != (0, 0) or pairs[-1] != (1, 1):
        raise LoopError("reparametrization must fix the endpoints")
    for (s0, t0), (s1, t1) in zip(pairs, pairs[1:]):
        if not (s0 < s1 and t0 < t1):
            raise LoopError("reparametrization must be strictly increasing")
    s_params = set(s for s, _ in pairs)
    # preimages of the loop's breakpoints under the bijection
    for (s0, t0), (s1, t1) in zip(pairs, pairs[1:]):
        for t in loop.path.params:
            if t0 <= t <= t1:
                s_params.add(s0 + (t - t0) * (s1 - s0) / (t1 - t0))

    def phi(s: Fraction) -> Fraction:
        for (s0, t0), (s1, t1) in zip(pairs, pairs[1:]):
            if s0 <= s <= s1:
                return t0 + (s - s0) * (t1 - t0) / (s1 - s0)
        raise LoopError(f"parameter {s} outside [0, 1]")

    bks = tuple((s, loop.path.at(phi(s))) for s in sorted(s_params))
    return Loop(PLPath(bks), loop.space)
