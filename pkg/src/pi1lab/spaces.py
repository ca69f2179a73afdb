"""Construction of the triangle bouquet and its segment compactification.

The bouquet X is the union of sliver triangles C_n (n >= 2) with vertices

    p = (0, 0),   B_n = (1/n, 1),   D_n = B_n + w(n) * (n, -1),

all sharing only the base point p; the default width profile is
w(n) = 1 / 10**(10*n). The compact space Y adds the vertical segment
alpha = [(0,0), (0,1)], the Hausdorff limit of the C_n. Circles are
materialized lazily by index and cached; each new circle is checked
exactly against all previously materialized ones for pairwise
intersection at p only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from . import kernels
from .exactnum import sqrt_decimal
from .geometry import ORIGIN, Point2, Segment, point, rat, segments_intersect
from .report import FAIL, PASS, ProbeReport, report_digits


class SpaceError(Exception):
    pass


class SpaceConsistencyError(SpaceError):
    """A width profile produced circles that violate the construction invariants."""


class OutsideSpaceError(SpaceError):
    """A point query fell outside the space (or hit the base point where
    a single component was required)."""


class SpaceKind(str, Enum):
    BOUQUET_X = "X"
    COMPACT_Y = "Y"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class WidthProfile:
    """Positive, strictly decreasing cap-width sequence for the triangles."""

    name: str
    fn: Callable[[int], Fraction]

    def __call__(self, n: int) -> Fraction:
        return Fraction(self.fn(n))


POW10 = WidthProfile("pow10", lambda n: Fraction(1, 10 ** (10 * n)))
CUBE = WidthProfile("cube", lambda n: Fraction(1, 10 * n**3))


def uniform_profile(value) -> WidthProfile:
    value = rat(value)
    return WidthProfile(f"uniform:{value}", lambda n: value)


def profile_by_name(name: str) -> WidthProfile:
    if name in ("pow10", "default"):
        return POW10
    if name == "cube":
        return CUBE
    if name.startswith("uniform:"):
        return uniform_profile(rat(name.split(":", 1)[1]))
    raise SpaceError(f"unknown width profile {name!r}")


ALPHA_SEGMENT = Segment(ORIGIN, point(0, 1))


@dataclass(frozen=True)
class Circle:
    """Triangle C_n with edges oriented p -> B_n -> D_n -> p.

    The orientation fixes the sign convention: one positive traversal of
    the edge cycle is the generator g_n.
    """

    index: int
    apex: Point2
    tail: Point2
    edges: Tuple[Segment, Segment, Segment]

    @property
    def vertices(self) -> Tuple[Point2, Point2, Point2]:
        return (ORIGIN, self.apex, self.tail)

    @property
    def edge_length_sq(self) -> Tuple[Fraction, Fraction, Fraction]:
        return tuple(e.length_sq for e in self.edges)


def build_circle(n: int, width_profile: WidthProfile = POW10) -> Circle:
    """Exact triangle for index n: vertices p, (1/n, 1) and the cap point."""
    if n < 2:
        raise SpaceError(f"circle index must be >= 2, got {n}")
    w = width_profile(n)
    if w <= 0:
        raise SpaceConsistencyError(f"width profile {width_profile.name} gave w({n}) = {w} <= 0")
    apex = Point2(Fraction(1, n), Fraction(1))
    tail = Point2(apex.x + w * n, apex.y - w)
    if kernels.orient(ORIGIN.quad(), apex.quad(), tail.quad()) == 0:
        raise SpaceConsistencyError(f"degenerate circle {n}: vertices collinear")
    edges = (Segment(ORIGIN, apex), Segment(apex, tail), Segment(tail, ORIGIN))
    return Circle(n, apex, tail, edges)


# An edge reference is ("alpha",) or ("c", n, j) with j in {0: p->B, 1: B->D, 2: D->p}.
EdgeRef = tuple

ALPHA_EDGE: EdgeRef = ("alpha",)


def edge_is_base_incident(ref: EdgeRef) -> bool:
    return ref == ALPHA_EDGE or ref[2] in (0, 2)


@dataclass(frozen=True)
class ComponentId:
    """A path component of (space minus the base point)."""

    kind: str  # "circle" | "alpha"
    index: Optional[int] = None

    @classmethod
    def circle(cls, n: int) -> "ComponentId":
        return cls("circle", n)

    @classmethod
    def alpha(cls) -> "ComponentId":
        return cls("alpha", None)

    def __str__(self) -> str:
        return "alpha" if self.kind == "alpha" else f"C{self.index}"


ALPHA_COMPONENT = ComponentId.alpha()


@dataclass(frozen=True)
class Membership:
    kind: str  # "outside" | "base" | "alpha" | "circle"
    circle_index: Optional[int] = None
    edge_index: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "circle":
            return f"on C{self.circle_index} edge {self.edge_index}"
        return {"outside": "outside", "base": "at p", "alpha": "on alpha"}[self.kind]


OUTSIDE = Membership("outside")


@dataclass(eq=False)
class SpaceHandle:
    """Lazy handle on X or Y for a fixed width profile.

    Materialization is cached; with ``verify`` on (the default) every new
    circle is tested exactly against all cached circles for the
    pairwise-intersection-at-p invariant, and against the profile's
    positivity/strict-decrease requirements.
    """

    kind: SpaceKind
    profile: WidthProfile = POW10
    hint: int = 32
    verify: bool = True
    _circles: Dict[int, Circle] = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpaceHandle):
            return NotImplemented
        return self.kind == other.kind and self.profile.name == other.profile.name

    def __hash__(self):
        return hash((self.kind, self.profile.name))

    @property
    def has_alpha(self) -> bool:
        return self.kind is SpaceKind.COMPACT_Y

    @property
    def alpha_segment(self) -> Segment:
        if not self.has_alpha:
            raise SpaceError("the bouquet X does not contain the limit segment alpha")
        return ALPHA_SEGMENT

    def sibling(self, kind: SpaceKind) -> "SpaceHandle":
        """The same construction viewed as the other space; shares the cache."""
        if kind == self.kind:
            return self
        return SpaceHandle(kind, self.profile, self.hint, self.verify, self._circles)

    def circle(self, n: int) -> Circle:
        circ = self._circles.get(n)
        if circ is not None:
            return circ
        circ = build_circle(n, self.profile)
        if self.verify:
            self._verify_against_cache(circ)
        self._circles[n] = circ
        return circ

    def _verify_against_cache(self, circ: Circle) -> None:
        w_new = self.profile(circ.index)
        for m in sorted(self._circles):
            other = self._circles[m]
            w_old = self.profile(m)
            decreasing = w_old > w_new if m < circ.index else w_old < w_new
            if not decreasing:
                raise SpaceConsistencyError(
                    f"width profile {self.profile.name} is not strictly decreasing "
                    f"between indices {m} and {circ.index}"
                )
            bad = _pair_intersection_violations(circ, other)
            if bad:
                raise SpaceConsistencyError(
                    f"circles C{circ.index} and C{m} intersect beyond the base point: {bad[0]}"
                )

    def materialized_indices(self) -> Tuple[int, ...]:
        return tuple(sorted(self._circles))

    # -- point queries -------------------------------------------------------

    def _candidate_indices(self, q: Point2, max_index: Optional[int]) -> Tuple[int, ...]:
        if q.x <= 0:
            return ()
        bound = max_index if max_index is not None else self.hint
        if self.profile.name == "pow10":
            # every point of C_n off p has y/x in (n-1, n]; ceil recovers n
            r = q.y / q.x
            n = -((-r.numerator) // r.denominator)  # ceil
            return tuple(k for k in (n - 1, n, n + 1) if k >= 2)
        return tuple(range(2, bound + 1))

    def membership(self, q: Point2, max_index: Optional[int] = None) -> Membership:
        """Exact stratum classification of a point."""
        if q == ORIGIN:
            return Membership("base")
        if self.has_alpha and ALPHA_SEGMENT.contains(q):
            return Membership("alpha")
        for n in self._candidate_indices(q, max_index):
            circ = self.circle(n)
            for j, e in enumerate(circ.edges):
                if e.contains(q):
                    return Membership("circle", n, j)
        return OUTSIDE

    def component_of(self, q: Point2, max_index: Optional[int] = None) -> ComponentId:
        """The unique component of (space minus p) containing q; q must not be p."""
        if q == ORIGIN:
            raise OutsideSpaceError("the base point lies in every stratum; no single component")
        m = self.membership(q, max_index)
        if m.kind == "outside":
            raise OutsideSpaceError(f"point {q} is not in the space")
        if m.kind == "alpha":
            return ALPHA_COMPONENT
        return ComponentId.circle(m.circle_index)

    def edges_containing(self, q: Point2, max_index: Optional[int] = None) -> Tuple[EdgeRef, ...]:
        """All edges through a non-base point (one, or two at a triangle vertex)."""
        if q == ORIGIN:
            raise SpaceError("edges_containing expects a point other than p")
        out = []
        if self.has_alpha and ALPHA_SEGMENT.contains(q):
            out.append(ALPHA_EDGE)
        for n in self._candidate_indices(q, max_index):
            circ = self.circle(n)
            for j, e in enumerate(circ.edges):
                if e.contains(q):
                    out.append(("c", n, j))
        return tuple(out)

    def edge_segment(self, ref: EdgeRef) -> Segment:
        if ref == ALPHA_EDGE:
            return self.alpha_segment
        return self.circle(ref[1]).edges[ref[2]]


def bouquet_x(hint: int = 32, profile: WidthProfile = POW10, verify: bool = True) -> SpaceHandle:
    return SpaceHandle(SpaceKind.BOUQUET_X, profile, hint, verify)


def compact_y(hint: int = 32, profile: WidthProfile = POW10, verify: bool = True) -> SpaceHandle:
    return SpaceHandle(SpaceKind.COMPACT_Y, profile, hint, verify)


_default_x: Optional[SpaceHandle] = None
_default_y: Optional[SpaceHandle] = None


def default_x() -> SpaceHandle:
    global _default_x
    if _default_x is None:
        _default_x = bouquet_x(hint=64)
    return _default_x


def default_y() -> SpaceHandle:
    global _default_y
    if _default_y is None:
        _default_y = default_x().sibling(SpaceKind.COMPACT_Y)
    return _default_y


def membership(q: Point2, space: SpaceHandle, max_index: Optional[int] = None) -> Membership:
    return space.membership(q, max_index)


def component_of(q: Point2, space: SpaceHandle, max_index: Optional[int] = None) -> ComponentId:
    return space.component_of(q, max_index)


def _pair_intersection_violations(c1: Circle, c2: Circle):
    """Exact witnesses that C_n and C_m meet anywhere besides p."""
    bad = []
    for e1 in c1.edges:
        for e2 in c2.edges:
            hit = segments_intersect(e1, e2)
            if hit is None:
                continue
            if isinstance(hit, Segment):
                bad.append(f"edges {e1} and {e2} overlap along {hit}")
            elif hit != ORIGIN:
                bad.append(f"edges {e1} and {e2} meet at {hit}")
    return bad


def verify_disjointness(space: SpaceHandle, up_to: int) -> ProbeReport:
    """Exact pairwise check that C_n meets C_m only at p for 2 <= n < m <= up_to.

    Violations are report content, not exceptions, so deliberately broken
    width profiles can be probed; circles are materialized without the
    handle's eager verification for the same reason.
    """
    if up_to < 3:
        raise SpaceError("up_to must be at least 3 (need at least one pair)")
    circles = {n: space._circles.get(n) or build_circle(n, space.profile) for n in range(2, up_to + 1)}
    witnesses = []
    pairs = 0
    for n in range(2, up_to + 1):
        for m in range(n + 1, up_to + 1):
            pairs += 1
            bad = _pair_intersection_violations(circles[n], circles[m])
            if bad:
                witnesses.append(
                    (
                        ("pair", f"C{n}, C{m}"),
                        ("violation", bad[0]),
                    )
                )
    return ProbeReport(
        probe="circle-pairwise-disjointness",
        claim="distinct circles of the bouquet meet exactly at the base point",
        verdict=PASS if not witnesses else FAIL,
        parameters=(
            ("space", str(space.kind)),
            ("width_profile", space.profile.name),
            ("up_to", str(up_to)),
            ("pairs_checked", str(pairs)),
        ),
        witnesses=tuple(witnesses),
    )


def circle_alpha_hausdorff_sq(space: SpaceHandle, n: int) -> Fraction:
    """Exact squared Hausdorff distance between C_n and alpha."""
    from .geometry import hausdorff_distance_sq

    circ = build_circle(n, space.profile)
    return hausdorff_distance_sq(circ.edges, (ALPHA_SEGMENT,))


def hausdorff_convergence(space: SpaceHandle, up_to: int) -> ProbeReport:
    """Exact table of d_H(C_n, alpha) for n = 2..up_to.

    PASS requires the squared distances to be strictly decreasing with
    every value at most (2/n)^2; when the table reaches n = 20 the report
    also states that all rows from 20 on lie below 1/10.
    """
    if not space.has_alpha:
        raise SpaceError("Hausdorff convergence is a statement about the compact space Y")
    if up_to < 2:
        raise SpaceError("up_to must be at least 2")
    digits = report_digits()
    rows = []
    values = []
    witnesses = []
    for n in range(2, up_to + 1):
        d_sq = circle_alpha_hausdorff_sq(space, n)
        bound_sq = Fraction(4, n * n)
        ok = d_sq <= bound_sq
        decreasing = not values or d_sq < values[-1]
        values.append(d_sq)
        rows.append(
            (
                str(n),
                str(d_sq),
                sqrt_decimal(d_sq, digits),
                str(bound_sq),
                "yes" if ok else "NO",
            )
        )
        if not ok:
            witnesses.append(
                (("n", str(n)), ("d_sq", str(d_sq)), ("exceeds_bound_sq", str(bound_sq)))
            )
        if not decreasing:
            witnesses.append(
                (("n", str(n)), ("d_sq", str(d_sq)), ("not_below_previous", str(values[-2])))
            )
    notes = []
    eps = Fraction(1, 10)
    if up_to >= 20:
        tail_ok = all(values[n - 2] < eps * eps for n in range(20, up_to + 1))
        notes.append(
            f"limit evidence: every row with n >= 20 lies below epsilon = {eps}: "
            + ("true" if tail_ok else "FALSE")
        )
        if not tail_ok:
            witnesses.append((("epsilon", str(eps)), ("reason", "tail row at or above epsilon")))
    return ProbeReport(
        probe="hausdorff-convergence",
        claim="the circles approach the limit segment monotonically in Hausdorff distance",
        verdict=PASS if not witnesses else FAIL,
        parameters=(
            ("space", str(space.kind)),
            ("width_profile", space.profile.name),
            ("up_to", str(up_to)),
        ),
        table_header=("n", "d_sq", f"d_dec({digits})", "bound_sq", "within_bound"),
        table_rows=tuple(rows),
        witnesses=tuple(witnesses),
        notes=tuple(notes),
    )
