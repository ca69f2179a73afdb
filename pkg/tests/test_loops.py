from fractions import Fraction

import pytest

from pi1lab.geometry import PLPath, point, sup_distance
from pi1lab.loops import (
    InvalidLoopError,
    Loop,
    SpaceMismatchError,
    WindingError,
    concatenate,
    concatenate_all,
    constant_loop,
    decompose,
    include_in_y,
    loop_from_breakpoints,
    realize_word,
    reparametrize,
    reverse,
    standard_f,
    standard_fn,
    validate,
    winding_degree,
)
from pi1lab.spaces import SpaceKind, compact_y
from pi1lab.words import parse_word

F = Fraction


@pytest.fixture(scope="module")
def y():
    return compact_y(hint=40)


@pytest.fixture(scope="module")
def x(y):
    return y.sibling(SpaceKind.BOUQUET_X)


class TestValidate:
    def test_standard_f_ok(self, y):
        assert validate(standard_f(y)) is None

    def test_breakpoint_outside(self, y):
        bad = loop_from_breakpoints([(0, 0, 0), ("1/2", 1, 1), (1, 0, 0)], y)
        v = validate(bad)
        assert v is not None and "outside" in v.reason

    def test_chord_not_in_space(self, y):
        # both endpoints lie in Y but the straight piece between them does not
        bad = loop_from_breakpoints(
            [(0, 0, 0), ("1/4", 0, "1/2"), ("1/2", "1/4", "1/2"), (1, 0, 0)], y
        )
        v = validate(bad)
        assert v is not None and "single edge" in v.reason

    def test_wrong_basepoint(self, y):
        bad = Loop(PLPath(((F(0), point(0, "1/2")), (F(1), point(0, "1/2")))), y)
        v = validate(bad)
        assert v is not None and "not at p" in v.reason

    def test_accepts_all_constructors(self, x, y):
        w = parse_word("g2 g3^-1 g2^2")
        samples = [
            standard_f(y),
            standard_fn(2, x),
            standard_fn(9, y),
            realize_word(w, x),
            concatenate(standard_fn(2, x), standard_fn(3, x)),
            reverse(standard_fn(4, x)),
            constant_loop(x),
            concatenate(standard_f(y), include_in_y(standard_fn(2, x))),
        ]
        for lp in samples:
            assert validate(lp) is None


class TestDecompose:
    def test_constant_empty(self, x):
        assert decompose(constant_loop(x)) == ()

    def test_alpha_single_excursion(self, y):
        excs = decompose(standard_f(y))
        assert len(excs) == 1
        assert excs[0].component.kind == "alpha"
        assert excs[0].t_start == 0 and excs[0].t_end == 1

    def test_two_excursions_in_order(self, x):
        lp = concatenate(standard_fn(2, x), standard_fn(3, x))
        excs = decompose(lp)
        assert [e.component.index for e in excs] == [2, 3]
        assert excs[0].t_end == F(1, 2) and excs[1].t_start == F(1, 2)

    def test_subpath_normalized(self, x):
        lp = concatenate(standard_fn(2, x), standard_fn(3, x))
        for exc in decompose(lp):
            assert exc.subpath.breakpoints[0][0] == 0
            assert exc.subpath.breakpoints[-1][0] == 1
            assert exc.subpath.at(0) == point(0, 0)
            assert exc.subpath.at(1) == point(0, 0)

    def test_coverage_of_unit_interval(self, x):
        lp = concatenate_all([standard_fn(2, x), constant_loop(x), standard_fn(5, x)])
        excs = decompose(lp)
        # excursion intervals are disjoint and the complement is constant at p
        spans = [(e.t_start, e.t_end) for e in excs]
        assert all(t0 < t1 for t0, t1 in spans)
        assert all(b0 <= a1 for (_, b0), (a1, _) in zip(spans, spans[1:]))
        for (_, b0), (a1, _) in zip(spans, spans[1:]):
            mid = (b0 + a1) / 2
            assert lp.path.at(mid) == point(0, 0)


class TestWinding:
    def test_positive_once_around(self, x):
        for n in (2, 5, 11):
            (exc,) = decompose(standard_fn(n, x))
            assert winding_degree(exc) == 1

    def test_reverse_negates(self, x):
        (exc,) = decompose(reverse(standard_fn(3, x)))
        assert winding_degree(exc) == -1

    def test_there_and_back_zero(self, x):
        apex = x.circle(4).apex
        lp = loop_from_breakpoints([(0, 0, 0), ("1/2", apex.x, apex.y), (1, 0, 0)], x)
        (exc,) = decompose(lp)
        assert winding_degree(exc) == 0

    def test_backtracking_traversal_still_one(self, x):
        # forward to the apex, back halfway, then on around: still one loop
        c = x.circle(2)
        half_up = c.edges[0].at(F(1, 2))
        w = F(1, 10**20)
        lp = loop_from_breakpoints(
            [
                (0, 0, 0),
                (F(1, 4), c.apex.x, c.apex.y),
                (F(3, 8), half_up.x, half_up.y),
                (F(1, 2), c.apex.x, c.apex.y),
                (F(3, 4), c.tail.x, c.tail.y),
                (1, 0, 0),
            ],
            x,
        )
        (exc,) = decompose(lp)
        assert winding_degree(exc) == 1

    def test_alpha_excursion_rejected(self, y):
        (exc,) = decompose(standard_f(y))
        with pytest.raises(WindingError):
            winding_degree(exc)


class TestStandardLoops:
    def test_f_breakpoints(self, y):
        f = standard_f(y)
        assert f.path.breakpoints == (
            (F(0), point(0, 0)),
            (F(1, 2), point(0, 1)),
            (F(1), point(0, 0)),
        )

    def test_fn_shadows_f(self, x):
        f2 = standard_fn(2, x)
        w = F(1, 10**20)
        assert f2.path.params == (F(0), F(1, 2), F(1 + w, 2), F(1))
        assert f2.path.at(F(1, 2)) == x.circle(2).apex

    def test_fn_single_positive_excursion(self, x):
        (exc,) = decompose(standard_fn(2, x))
        assert exc.component.index == 2 and winding_degree(exc) == 1

    def test_sup_distance_exact_and_bounded(self, y):
        # exact closed form: max deviation is the cap vertex offset 1/n + n*w,
        # reached while the alpha loop sits at the same height
        f = standard_f(y)
        prev = None
        for n in range(2, 33):
            fn = standard_fn(n, y)
            d = sup_distance(fn.path, f.path)
            w = y.profile(n)
            assert d.squared == (F(1, n) + n * w) ** 2
            assert d.squared <= F(4, n * n)  # the 2/n bound, squared
            if prev is not None:
                assert d.squared < prev
            prev = d.squared

    def test_f2_sampling_oracle(self, y):
        f = standard_f(y)
        f2 = standard_fn(2, y)
        exact = sup_distance(f2.path, f.path).squared
        grid = 10**4
        sampled = max(
            f2.path.at(F(k, grid)).dist_sq(f.path.at(F(k, grid))) for k in range(grid + 1)
        )
        assert sampled <= exact
        from pi1lab.exactnum import sqrt_leq_sqrt_plus_sqrt

        assert sqrt_leq_sqrt_plus_sqrt(exact, sampled, F(1, 1000) ** 2)

    def test_fn_index_validation(self, x):
        with pytest.raises(Exception):
            standard_fn(1, x)


class TestCombinators:
    def test_concat_constant_keeps_excursions(self, y):
        f = standard_f(y)
        lp = concatenate(constant_loop(y), f)
        excs = decompose(lp)
        assert len(excs) == 1 and excs[0].component.kind == "alpha"

    def test_concat_rescales_decompositions(self, x):
        a, b = standard_fn(2, x), reverse(standard_fn(3, x))
        combined = decompose(concatenate(a, b))
        da, db = decompose(a), decompose(b)
        assert len(combined) == len(da) + len(db)
        for exc, orig in zip(combined[: len(da)], da):
            assert exc.t_start == orig.t_start / 2 and exc.t_end == orig.t_end / 2
            assert exc.component == orig.component
            assert winding_degree(exc) == winding_degree(orig)
        for exc, orig in zip(combined[len(da) :], db):
            assert exc.t_start == F(1, 2) + orig.t_start / 2
            assert exc.component == orig.component
            assert winding_degree(exc) == winding_degree(orig)

    def test_space_mismatch(self, x, y):
        with pytest.raises(SpaceMismatchError):
            concatenate(standard_fn(2, x), standard_f(y))

    def test_reverse_degree(self, x):
        lp = reverse(standard_fn(2, x))
        (exc,) = decompose(lp)
        assert winding_degree(exc) == -1


class TestRealizeWord:
    def test_identity_constant(self, x):
        lp = realize_word(parse_word("1"), x)
        assert decompose(lp) == ()

    def test_single_generator(self, x):
        (exc,) = decompose(realize_word(parse_word("g2"), x))
        assert exc.component.index == 2 and winding_degree(exc) == 1

    def test_mixed_word(self, x):
        excs = decompose(realize_word(parse_word("g2 g3^-1 g2"), x))
        assert [(e.component.index, winding_degree(e)) for e in excs] == [
            (2, 1),
            (3, -1),
            (2, 1),
        ]

    def test_exponents_expand(self, x):
        excs = decompose(realize_word(parse_word("g4^3"), x))
        assert [(e.component.index, winding_degree(e)) for e in excs] == [(4, 1)] * 3


class TestReparametrization:
    def test_invariance(self, x):
        lp = realize_word(parse_word("g2 g3^-1"), x)
        warped = reparametrize(lp, [(0, 0), ("1/3", "2/3"), (1, 1)])
        orig = [(e.component, winding_degree(e)) for e in decompose(lp)]
        new = [(e.component, winding_degree(e)) for e in decompose(warped)]
        assert orig == new

    def test_same_image(self, x):
        lp = standard_fn(2, x)
        warped = reparametrize(lp, [(0, 0), ("1/2", "1/4"), (1, 1)])
        assert validate(warped) is None
        assert warped.path.at(F(1, 2)) == lp.path.at(F(1, 4))

    def test_bad_bijection(self, x):
        lp = standard_fn(2, x)
        with pytest.raises(Exception):
            reparametrize(lp, [(0, 0), ("1/2", "1/2"), (1, "3/4")])


class TestDecomposeErrors:
    def test_invalid_loop_raises(self, y):
        bad = loop_from_breakpoints([(0, 0, 0), ("1/2", 1, 1), (1, 0, 0)], y)
        with pytest.raises(InvalidLoopError):
            decompose(bad)
