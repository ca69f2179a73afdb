"""Loop classification and the topological probes.

Classification in the bouquet X reads the free-group word off the excursion
decomposition: an excursion of winding degree d in circle n contributes
g_n^d. Classification in the compactification Y first collapses the loop
into X — every alpha excursion, and every apex-avoiding excursion into a
circle beyond the cutoff index, contracts to the base point inside its own
arm — and then classifies the collapsed loop. Distinct reduced words name
distinct classes in both spaces, so word equality decides homotopy.

The probes turn the headline facts into exact certificates:

* ``probe_nondiscreteness_y``: the circle loops converge uniformly to the
  alpha loop while their classes stay away from the identity, so the
  identity class of Y has no uniform-metric neighborhood of its own.
* ``probe_discreteness_x``: random on-complex perturbations below an
  explicit stability radius never change a loop's word in X.
* ``probe_slsc_y``: every sampled loop inside a small ball about p is
  trivial in Y — small loops cannot complete any circle circuit because
  every circuit passes the apex at height 1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from . import kernels
from .exactnum import dyadic_sqrt_bounds, rational_decimal
from .geometry import ORIGIN, PLPath, Point2, Segment, sup_distance
from .loops import (
    Excursion,
    Loop,
    _analyze,
    concatenate_all,
    decompose,
    include_in_y,
    realize_word,
    standard_f,
    standard_fn,
    validate,
    winding_degree,
)
from .report import FAIL, PASS, ProbeReport, report_digits
from .spaces import SpaceHandle, SpaceKind, default_y
from .words import Word, format_word, reduce_letters


class ClassificationError(Exception):
    pass


class ProbeParameterError(Exception):
    pass


@dataclass(frozen=True)
class HomotopyClass:
    """A based homotopy class, named by its reduced word and space."""

    word: Word
    space_kind: SpaceKind

    def __str__(self) -> str:
        return f"{format_word(self.word)} in pi1({self.space_kind})"


@dataclass(frozen=True)
class CollapseAction:
    """Per-excursion record of what the collapse did and why it is sound."""

    t_start: Fraction
    t_end: Fraction
    component: str
    action: str  # "kept" | "collapsed"
    reason: str


def classify_x(loop: Loop) -> HomotopyClass:
    """Word of a loop that stays in the bouquet X."""
    letters = []
    for exc in decompose(loop):
        if exc.component.kind != "circle":
            raise ClassificationError(
                "loop leaves the bouquet: excursion into the limit segment "
                f"on [{exc.t_start}, {exc.t_end}]"
            )
        d = winding_degree(exc)
        if d != 0:
            letters.append((exc.component.index, d))
    return HomotopyClass(reduce_letters(letters), SpaceKind.BOUQUET_X)


def _apex_on_excursion(exc: Excursion, apex: Point2) -> bool:
    for ((_, p0), (_, p1)), ref in zip(exc.subpath.pieces(), exc.piece_edges):
        if ref is None:
            if p0 == apex:
                return True
            continue
        if ref[2] not in (0, 1):
            continue
        if p0 == apex or p1 == apex or Segment(p0, p1).contains(apex):
            return True
    return False


def choose_n(loop: Loop) -> int:
    """Smallest N >= 2 such that beyond it the loop is collapsible.

    For every n >= N the loop's image misses the apex B_n and every
    excursion into C_n has winding degree 0; finite PL loops touch finitely
    many circles, so N exists. (A nonzero degree forces a full traversal
    through the apex, so the apex condition already implies the degree
    condition; both are checked.)
    """
    worst = 1
    for exc in decompose(loop):
        if exc.component.kind != "circle":
            continue
        n = exc.component.index
        if n <= worst:
            continue
        apex = loop.space.circle(n).apex
        if winding_degree(exc) != 0 or _apex_on_excursion(exc, apex):
            worst = n
    return max(2, worst + 1)


def collapse_with_certificate(loop: Loop) -> Tuple[Loop, Tuple[CollapseAction, ...]]:
    """End loop of the deformation into X, plus per-excursion justifications.

    With N = choose_n(loop): alpha excursions contract along their own arm,
    excursions into C_n with n >= N (apex-avoiding, degree 0 by the choice
    of N) contract inside the punctured circle, and excursions into C_n with
    n < N are kept verbatim. The output is a valid loop in X covering the
    same parameter intervals, with collapsed stretches constant at p.
    """
    excs = decompose(loop)
    cutoff = choose_n(loop)
    bks = loop.path.breakpoints
    index_of = {t: i for i, (t, _) in enumerate(bks)}
    drop = set()
    actions = []
    for exc in excs:
        comp = exc.component
        if comp.kind == "circle" and comp.index < cutoff:
            actions.append(
                CollapseAction(exc.t_start, exc.t_end, str(comp), "kept", f"circle index below N = {cutoff}")
            )
            continue
        if comp.kind == "circle":
            reason = f"degree-0 arc in C{comp.index} avoiding the apex; contracts inside the punctured circle"
        else:
            reason = "arc in the limit segment; contracts along the segment to p"
        actions.append(CollapseAction(exc.t_start, exc.t_end, str(comp), "collapsed", reason))
        i, j = index_of[exc.t_start], index_of[exc.t_end]
        drop.update(range(i + 1, j))
    new_bks = tuple((t, q) for k, (t, q) in enumerate(bks) if k not in drop)
    x_space = loop.space.sibling(SpaceKind.BOUQUET_X)
    return Loop(PLPath(new_bks), x_space), tuple(actions)


def collapse_to_x(loop: Loop) -> Loop:
    return collapse_with_certificate(loop)[0]


def classify_y(loop: Loop) -> HomotopyClass:
    """Word of a loop in the compactification Y: collapse into X, classify there.

    Accepts loops carried by X as well (the inclusion is a homeomorphism
    onto its image).
    """
    loop = include_in_y(loop)
    collapsed, _ = collapse_with_certificate(loop)
    cls = classify_x(collapsed)
    return HomotopyClass(cls.word, SpaceKind.COMPACT_Y)


def induced_map(c: HomotopyClass) -> HomotopyClass:
    """The inclusion-induced isomorphism on classes: identity on words."""
    if c.space_kind is not SpaceKind.BOUQUET_X:
        raise ClassificationError("induced_map takes classes of the bouquet X")
    return HomotopyClass(c.word, SpaceKind.COMPACT_Y)


def classify(loop: Loop) -> HomotopyClass:
    """Classification in the loop's own space."""
    if loop.space.kind is SpaceKind.BOUQUET_X:
        return classify_x(loop)
    return classify_y(loop)


# -- probes -------------------------------------------------------------------


def probe_nondiscreteness_y(
    n_max: int, epsilon: Fraction, space: Optional[SpaceHandle] = None
) -> ProbeReport:
    """Certificates that the identity class of pi1(Y) is not open.

    For each n the report carries the exact sup distance between the circle
    loop f_n and the alpha loop f together with their words (g_n versus the
    identity). PASS means the distances strictly decrease and end below
    epsilon while every f_n stays in a different class than f: every
    epsilon-ball around f meets another path component.
    """
    if n_max < 2:
        raise ProbeParameterError("n_max must be at least 2")
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ProbeParameterError("epsilon must be positive")
    space = space if space is not None else default_y()
    if not space.has_alpha:
        raise ProbeParameterError("nondiscreteness is probed in the compact space Y")
    digits = report_digits()
    f = standard_f(space)
    word_f = classify_y(f).word
    rows = []
    witnesses = []
    prev: Optional[Fraction] = None
    last_sq: Optional[Fraction] = None
    words_ok = word_f.is_identity
    decreasing = True
    for n in range(2, n_max + 1):
        fn = standard_fn(n, space)
        d = sup_distance(fn.path, f.path)
        w = classify_y(fn).word
        rows.append((str(n), format_word(w), str(d.squared), d.decimal(digits)))
        if w.is_identity:
            words_ok = False
            witnesses.append((("n", str(n)), ("reason", "circle loop classified as identity")))
        if prev is not None and not d.squared < prev:
            decreasing = False
            witnesses.append(
                (("n", str(n)), ("d_sq", str(d.squared)), ("not_below_previous", str(prev)))
            )
        prev = d.squared
        last_sq = d.squared
    below = last_sq < epsilon * epsilon
    if not below:
        witnesses.append(
            (
                ("n", str(n_max)),
                ("d_sq", str(last_sq)),
                ("epsilon", str(epsilon)),
                ("gap", "final sup distance is not yet below epsilon; enlarge n_max"),
            )
        )
    verdict = PASS if (below and decreasing and words_ok) else FAIL
    return ProbeReport(
        probe="nondiscreteness-Y",
        claim=(
            "the constant class of pi1(Y) is not open: essential circle loops "
            "converge uniformly to the inessential alpha loop"
        ),
        verdict=verdict,
        parameters=(
            ("space", str(space.kind)),
            ("width_profile", space.profile.name),
            ("n_max", str(n_max)),
            ("epsilon", str(epsilon)),
            ("word_of_limit_loop", format_word(word_f)),
        ),
        table_header=("n", "word", "sup_dist_sq", f"sup_dist_dec({digits})"),
        table_rows=tuple(rows),
        witnesses=tuple(witnesses),
    )


def _distal_half(edge: Segment, edge_index: int) -> Segment:
    """The half of a base-incident edge away from p (whole cap otherwise)."""
    mid = edge.at(Fraction(1, 2))
    if edge_index == 0:
        return Segment(mid, edge.b)
    if edge_index == 2:
        return Segment(edge.a, mid)
    return edge


def stability_radius(loop: Loop) -> Fraction:
    """Conservative exact radius below which X-perturbations cannot change words.

    rho = (1/8) * min(1/N^2, clearance) where N is the largest circle index
    the loop touches and the clearance is a dyadic lower bound on the least
    distance between p-distal edge halves of distinct touched circles. The
    1/N^2 term reflects the angular separation of the arms at p.
    """
    touched = sorted(
        {exc.component.index for exc in decompose(loop) if exc.component.kind == "circle"}
    )
    n_top = touched[-1] if touched else 2
    best = Fraction(1, n_top * n_top)
    from .geometry import segment_segment_distance_sq

    for i, n in enumerate(touched):
        cn = loop.space.circle(n)
        for m in touched[i + 1 :]:
            cm = loop.space.circle(m)
            for jn, en in enumerate(cn.edges):
                for jm, em in enumerate(cm.edges):
                    d_sq = segment_segment_distance_sq(
                        _distal_half(en, jn), _distal_half(em, jm)
                    )
                    lo, _ = dyadic_sqrt_bounds(d_sq)
                    if lo < best:
                        best = lo
    return best / 8


def _slide_candidates(loop: Loop, edges) -> Tuple[int, ...]:
    """Interior breakpoints whose two adjacent pieces share one edge."""
    out = []
    for i in range(1, len(loop.path.breakpoints) - 1):
        before, after = edges[i - 1], edges[i]
        if before is not None and before == after:
            out.append(i)
    return out


def _perturb_once(loop: Loop, rng: random.Random, bound: Fraction) -> Loop:
    """One random valid perturbation: subdivide, slide along carrying edges,
    and bounce tiny degree-0 excursions off p; stays within sup distance
    ``bound`` of the input (verified exactly by the caller)."""
    grid = 64
    path = loop.path
    # subdivide a few pieces so there is something to slide
    extra = []
    params = path.params
    for _ in range(rng.randint(1, 3)):
        i = rng.randrange(len(params) - 1)
        k = rng.randint(1, grid - 1)
        extra.append(params[i] + (params[i + 1] - params[i]) * Fraction(k, grid))
    path = path.with_params(extra)
    work = Loop(path, loop.space)
    edges = _analyze(work)
    bks = list(path.breakpoints)
    # slide interior breakpoints along their carrying edge
    for i in _slide_candidates(work, edges):
        if rng.random() < 0.5:
            continue
        ref = edges[i - 1]
        seg = loop.space.edge_segment(ref)
        _, hi_len = dyadic_sqrt_bounds(seg.length_sq)
        max_du = bound / (2 * hi_len)
        t, q = bks[i]
        u = Fraction(*kernels.foot_param(q.quad(), seg.a.quad(), seg.b.quad()))
        du = max_du * Fraction(rng.randint(-grid, grid), grid)
        u2 = min(max(u + du, Fraction(0)), Fraction(1))
        bks[i] = (t, seg.at(u2))
    # bounce: replace one constant-at-p piece with a tiny degree-0 excursion
    const_p = [
        i
        for i, ((_, p0), (_, p1)) in enumerate(zip(bks, bks[1:]))
        if p0 == ORIGIN and p1 == ORIGIN
    ]
    if const_p and rng.random() < 0.75:
        i = rng.choice(const_p)
        touched = sorted({ref[1] for ref in edges if ref is not None and ref[0] == "c"})
        n = rng.choice(touched or [2])
        circ = loop.space.circle(n)
        arm_edge, arm_u = (
            (circ.edges[0], Fraction(0)) if rng.random() < 0.5 else (circ.edges[2], Fraction(1))
        )
        _, hi_len = dyadic_sqrt_bounds(arm_edge.length_sq)
        du = (bound / (2 * hi_len)) * Fraction(rng.randint(1, grid), grid)
        u2 = arm_u + (du if arm_u == 0 else -du)
        t0, t1 = bks[i][0], bks[i + 1][0]
        tm = (t0 + t1) / 2
        bks.insert(i + 1, (tm, arm_edge.at(u2)))
    return Loop(PLPath(tuple(bks)), loop.space)


def probe_discreteness_x(
    loop: Loop, trials: int, magnitude: Fraction, seed: int = 0
) -> ProbeReport:
    """Word stability of an X loop under random on-complex perturbations.

    Every trial perturbs the loop without leaving the 1-complex (breakpoints
    slide along their carrying edges; tiny degree-0 bounces may sprout at p),
    keeps the exact sup distance below min(magnitude, rho), and re-classifies.
    PASS means the word never changed. Magnitudes at or above the stability
    radius rho are rejected: the claim is only certified below it.
    """
    if loop.space.kind is not SpaceKind.BOUQUET_X:
        raise ProbeParameterError("discreteness is probed in the bouquet X")
    if trials < 1:
        raise ProbeParameterError("trials must be positive")
    magnitude = Fraction(magnitude)
    if magnitude <= 0:
        raise ProbeParameterError("magnitude must be positive")
    rho = stability_radius(loop)
    if magnitude >= rho:
        raise ProbeParameterError(
            f"magnitude {magnitude} is not below the stability radius {rho}; "
            "the word-stability claim is only certified below the radius"
        )
    digits = report_digits()
    base_word = classify_x(loop).word
    rng = random.Random(seed)
    bound = magnitude
    witnesses = []
    max_seen = Fraction(0)
    agree = 0
    for trial in range(trials):
        cand = None
        for _ in range(8):
            attempt = _perturb_once(loop, rng, bound)
            d = sup_distance(attempt.path, loop.path)
            if d.squared < bound * bound:
                cand = (attempt, d)
                break
            bound = bound / 2
        if cand is None:
            cand = (Loop(loop.path.with_params([Fraction(1, 3)]), loop.space), None)
        perturbed, dist = cand
        if dist is not None and dist.squared > max_seen:
            max_seen = dist.squared
        w = classify_x(perturbed).word
        if w == base_word:
            agree += 1
        else:
            witnesses.append(
                (
                    ("trial", str(trial)),
                    ("expected", format_word(base_word)),
                    ("got", format_word(w)),
                    ("sup_dist_sq", str(dist.squared) if dist else "0"),
                )
            )
    verdict = PASS if not witnesses else FAIL
    return ProbeReport(
        probe="discreteness-X",
        claim=(
            "the class of a loop in the bouquet X is stable under every tested "
            "on-complex perturbation below the stability radius"
        ),
        verdict=verdict,
        parameters=(
            ("space", str(loop.space.kind)),
            ("width_profile", loop.space.profile.name),
            ("word", format_word(base_word)),
            ("trials", str(trials)),
            ("magnitude", str(magnitude)),
            ("stability_radius", str(rho)),
            ("stability_radius_dec", rational_decimal(rho, digits)),
            ("seed", str(seed)),
            ("max_perturbation_sq_seen", str(max_seen)),
            ("agreeing_trials", str(agree)),
        ),
        witnesses=tuple(witnesses),
    )


def random_reduced_word(
    rng: random.Random, max_len: int = 10, generators: Sequence[int] = tuple(range(2, 10))
) -> Word:
    """Uniform-ish reduced word: a random walk that never undoes its last letter."""
    length = rng.randint(0, max_len)
    letters = []
    prev = None
    for _ in range(length):
        while True:
            n = rng.choice(generators)
            s = rng.choice((1, -1))
            if prev is None or (n, -s) != prev:
                break
        letters.append((n, s))
        prev = (n, s)
    return reduce_letters(letters)


def alpha_decorate(loop: Loop, rng: random.Random) -> Loop:
    """A homotopic variant in Y: splice in alpha excursions and an
    apex-avoiding degree-0 excursion into a circle beyond the loop's cutoff."""
    space = loop.space
    if not space.has_alpha:
        raise ProbeParameterError("decoration lives in the compact space Y")
    f = standard_f(space)
    far = choose_n(loop) + rng.randint(0, 3)
    arm = space.circle(far).edges[0]
    mid = arm.at(Fraction(1, 2))
    bounce = Loop(
        PLPath(((Fraction(0), ORIGIN), (Fraction(1, 2), mid), (Fraction(1), ORIGIN))), space
    )
    pattern = rng.choice(
        (
            (f, loop, bounce),
            (bounce, loop, f),
            (f, bounce, loop, f),
            (loop, f, bounce),
        )
    )
    return concatenate_all(list(pattern))


def probe_isomorphism_roundtrip(
    count: int = 100,
    max_len: int = 10,
    seed: int = 0,
    space: Optional[SpaceHandle] = None,
) -> ProbeReport:
    """Round-trip evidence that inclusion induces an isomorphism on classes.

    For random reduced words w: the loop realizing w classifies back to w in
    Y (surjectivity side, via the collapse), the inclusion-induced map agrees
    with direct classification, and collapsing an alpha-decorated homotopic
    variant lands in X with the same word (collapse soundness). Injectivity
    is word normal-form uniqueness, exercised by the word comparisons.
    """
    if count < 1:
        raise ProbeParameterError("count must be positive")
    y_space = space if space is not None else default_y()
    if not y_space.has_alpha:
        raise ProbeParameterError("the round trip is a statement about Y")
    x_space = y_space.sibling(SpaceKind.BOUQUET_X)
    rng = random.Random(seed)
    witnesses = []
    checked = 0
    for k in range(count):
        w = random_reduced_word(rng, max_len)
        lx = realize_word(w, x_space)
        ly = include_in_y(lx)
        w_y = classify_y(ly).word
        w_ind = induced_map(classify_x(lx)).word
        decorated = alpha_decorate(ly, rng)
        collapsed, _ = collapse_with_certificate(decorated)
        w_dec = classify_x(collapsed).word
        collapsed_ok = (
            collapsed.space.kind is SpaceKind.BOUQUET_X and validate(collapsed) is None
        )
        checked += 1
        if not (w_y == w and w_ind == w and w_dec == w and collapsed_ok):
            witnesses.append(
                (
                    ("word", format_word(w)),
                    ("classify_Y", format_word(w_y)),
                    ("induced", format_word(w_ind)),
                    ("decorated_collapse", format_word(w_dec)),
                    ("collapsed_valid_in_X", str(collapsed_ok)),
                )
            )
    return ProbeReport(
        probe="isomorphism-roundtrip",
        claim=(
            "inclusion of the bouquet into its compactification induces a word-"
            "preserving bijection on the tested classes, stable under homotopic decoration"
        ),
        verdict=PASS if not witnesses else FAIL,
        parameters=(
            ("space", str(y_space.kind)),
            ("width_profile", y_space.profile.name),
            ("words", str(checked)),
            ("max_len", str(max_len)),
            ("seed", str(seed)),
        ),
        witnesses=tuple(witnesses),
    )


def loop_in_ball(loop: Loop, radius: Fraction) -> bool:
    """Exactly decide whether the loop's image lies in the closed ball at p."""
    r_sq = Fraction(radius) ** 2
    return all(q.dist_sq(ORIGIN) <= r_sq for _, q in loop.path.breakpoints)


def _sample_small_loop(
    space: SpaceHandle, radius: Fraction, rng: random.Random
) -> Loop:
    """A random valid loop inside the ball: wiggles along arms through p.

    Arms are the limit segment and the two p-incident edges of low circles;
    every excursion stays on one arm, hence has degree 0 — completing any
    circuit would require passing the apex at height 1, outside the ball.
    """
    grid = 64
    bks = [(Fraction(0), ORIGIN)]
    groups = rng.randint(1, 3)
    for g in range(groups):
        kind = rng.choice(["alpha", "arm0", "arm2"])
        if kind == "alpha" and space.has_alpha:
            direction = space.alpha_segment.b
        else:
            n = rng.randint(2, 9)
            circ = space.circle(n)
            direction = circ.apex if kind != "arm2" else circ.tail
        _, hi = dyadic_sqrt_bounds(direction.dist_sq(ORIGIN))
        s_max = Fraction(radius) / hi
        wiggles = rng.randint(1, 4)
        heights = [s_max * Fraction(rng.randint(1, grid), grid) for _ in range(wiggles)]
        t0 = Fraction(g, groups)
        t1 = Fraction(g + 1, groups)
        inner = len(heights)
        for k, s in enumerate(heights):
            t = t0 + (t1 - t0) * Fraction(k + 1, inner + 1)
            q = Point2(direction.x * s, direction.y * s)
            if bks[-1][1] == q:
                continue
            bks.append((t, q))
        bks.append((t1, ORIGIN))
    if bks[-1][0] != 1:
        bks.append((Fraction(1), ORIGIN))
    return Loop(PLPath(tuple(bks)), space)


def probe_slsc_y(
    radius: Fraction,
    samples: int,
    seed: int = 0,
    space: Optional[SpaceHandle] = None,
    extra_loops: Sequence[Loop] = (),
) -> ProbeReport:
    """Evidence that Y is semilocally simply connected at p.

    Samples valid loops confined to the closed ball of the given radius
    about p and checks that every one classifies to the identity in Y.
    Explicitly submitted loops that leave the ball are rejected (listed,
    not classified). Pair with probe_nondiscreteness_y: together they show
    a space can be semilocally simply connected at the base point while its
    fundamental group still fails to be discrete.
    """
    radius = Fraction(radius)
    if not 0 < radius < Fraction(1, 2):
        raise ProbeParameterError("radius must lie strictly between 0 and 1/2")
    if samples < 1:
        raise ProbeParameterError("samples must be positive")
    space = space if space is not None else default_y()
    if not space.has_alpha:
        raise ProbeParameterError("semilocal simple connectivity is probed in Y")
    rng = random.Random(seed)
    witnesses = []
    rejected = 0
    trivial = 0
    checked = 0
    for k in range(samples):
        lp = _sample_small_loop(space, radius, rng)
        if not loop_in_ball(lp, radius):
            raise AssertionError("sampler produced an out-of-ball loop")
        checked += 1
        w = classify_y(lp).word
        if w.is_identity:
            trivial += 1
        else:
            witnesses.append(
                (("sample", str(k)), ("word", format_word(w)), ("reason", "nontrivial small loop"))
            )
    for k, lp in enumerate(extra_loops):
        if not loop_in_ball(lp, radius):
            rejected += 1
            witnesses_note = (
                ("extra_loop", str(k)),
                ("status", "rejected: image leaves the ball; not classified"),
            )
            witnesses.append(witnesses_note)
            continue
        checked += 1
        w = classify_y(lp).word
        if w.is_identity:
            trivial += 1
        else:
            witnesses.append(
                (("extra_loop", str(k)), ("word", format_word(w)), ("reason", "nontrivial small loop"))
            )
    failing = [w for w in witnesses if dict(w).get("reason") == "nontrivial small loop"]
    verdict = PASS if not failing else FAIL
    return ProbeReport(
        probe="slsc-Y",
        claim=(
            "every sampled loop within the ball about the base point is "
            "null-homotopic in Y (no circuit fits: each circle's apex sits at height 1)"
        ),
        verdict=verdict,
        parameters=(
            ("space", str(space.kind)),
            ("width_profile", space.profile.name),
            ("radius", str(radius)),
            ("samples", str(samples)),
            ("seed", str(seed)),
            ("classified", str(checked)),
            ("trivial", str(trivial)),
            ("rejected_out_of_ball", str(rejected)),
        ),
        witnesses=tuple(witnesses),
        notes=(
            "combine with probe nondiscreteness-Y: Y is semilocally simply connected "
            "at p while pi1(Y) is not discrete",
        ),
    )
