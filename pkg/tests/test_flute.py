import itertools
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
import hypothesis.strategies as st

from fuchsia.errors import IndexOutOfRange, InsufficientData, UnknownType
from fuchsia.flute import (
    ConstantTail,
    CustomTail,
    GeometricTail,
    HarmonicTail,
    SequenceSpec,
    TypeVerdict,
    basmajian_closed_form,
    basmajian_term,
    build_flute,
    classify_type,
    convex_core_boundary,
    exact_integral,
    flute_generator,
    flute_matrix,
    flute_polygon,
    is_integral,
    length_param,
    partial_sums,
)
from fuchsia.geodesics import HalfCircle, image_of_geodesic, mutually_exterior, same_geodesic
from fuchsia.moebius import MapClass, apply, classify, close, translation_length

from conftest import positive_sequences


def sums(x):
    return tuple(itertools.accumulate(float(v) for v in x))


def eq2_oracle(prev, cur):
    """Length formula evaluated literally at 50 digits."""
    with mpmath.workdps(50):
        p, c = mpmath.mpf(prev), mpmath.mpf(cur)
        root = 2 * mpmath.sqrt(p * c)
        return float(mpmath.log((p + c + root) / (p + c - root)))


class TestPartialSums:
    def test_ones(self):
        assert partial_sums(SequenceSpec((1, 1, 1)), 3) == [1, 2, 3]

    def test_geometric(self):
        spec = SequenceSpec((), GeometricTail(1.0, 0.5))
        assert partial_sums(spec, 4) == [1, 1.5, 1.75, 1.875]

    def test_alternating_prefix(self):
        assert partial_sums(SequenceSpec((1, 2, 1, 2)), 4) == [1, 3, 4, 6]

    def test_tail_continues_prefix(self):
        assert partial_sums(SequenceSpec((1,), ConstantTail(2)), 3) == [1, 3, 5]
        assert partial_sums(SequenceSpec((), HarmonicTail(1)), 3) == pytest.approx([1, 1.5, 1.5 + 1 / 3])

    def test_insufficient(self):
        with pytest.raises(InsufficientData):
            partial_sums(SequenceSpec((1, 2)), 3)
        with pytest.raises(InsufficientData):
            partial_sums(SequenceSpec((1,), CustomTail(True)), 2)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            SequenceSpec((1, 0))
        with pytest.raises(ValueError):
            SequenceSpec((1,), GeometricTail(1, -0.5))


class TestGenerator:
    def test_g0(self):
        g = flute_generator(0, (1.0,))
        assert g.entries == (1, 0, -2, 1)
        assert classify(g) is MapClass.PARABOLIC
        assert apply(g, 0.0) == 0.0

    def test_g1(self):
        g = flute_generator(1, (1.0, 2.0))
        assert g.entries == (3, -4, -2, 3)
        assert g.trace == 6

    def test_g1_pairs_endpoints(self):
        g = flute_generator(1, (1.0, 2.0))
        assert apply(g, 1.0) == -1.0
        assert apply(g, 2.0) == -2.0

    def test_index_range(self):
        with pytest.raises(IndexOutOfRange):
            flute_generator(2, (1.0, 2.0))

    def test_exact_determinant_one(self):
        s = [Fraction(v) for v in (Fraction(3, 7), Fraction(1), Fraction(22, 9), Fraction(5))]
        for n in range(len(s)):
            a, b, c, d = flute_matrix(n, s)
            assert a * d - b * c == 1

    @given(positive_sequences)
    def test_trace_formula_and_pairing(self, x):
        s = sums(x)
        for n in range(len(s)):
            g = flute_generator(n, s)
            prev = s[n - 1] if n else 0.0
            assert close(apply(g, prev), -prev)
            assert close(apply(g, s[n]), -s[n])
            if n == 0:
                assert g.trace == 2
            else:
                assert close(g.trace, 2 * (s[n] + s[n - 1]) / (s[n] - s[n - 1]))

    @given(st.lists(st.floats(min_value=0.1, max_value=10), min_size=1, max_size=8))
    def test_raw_determinant(self, x):
        s = sums(x)
        for n in range(len(s)):
            a, b, c, d = flute_matrix(n, s)
            assert abs(a * d - b * c - 1) <= 1e-12 * max(1.0, abs(a * d) + abs(b * c))


class TestBuild:
    def test_two_generators(self):
        grp = build_flute(SequenceSpec((1, 1)), 2)
        assert [g.entries for g in grp.generators] == [(1, 0, -2, 1), (3, -4, -2, 3)]
        assert grp.sides == (
            (HalfCircle(0.5, 0.5), HalfCircle(-0.5, 0.5)),
            (HalfCircle(1.5, 0.5), HalfCircle(-1.5, 0.5)),
        )

    def test_dets(self):
        grp = build_flute(SequenceSpec((1, 2, 1)), 3)
        assert all(abs(g.det - 1) < 1e-12 for g in grp.generators)

    @given(positive_sequences)
    def test_invariants(self, x):
        grp = build_flute(SequenceSpec(tuple(x)), len(x))
        kinds = [classify(g) for g in grp.generators]
        assert kinds[0] is MapClass.PARABOLIC
        assert all(k is MapClass.HYPERBOLIC for k in kinds[1:])
        circles = [c for pair in grp.sides for c in pair]
        assert mutually_exterior(circles)
        for g, (plus, minus) in zip(grp.generators, grp.sides):
            assert same_geodesic(image_of_geodesic(g, plus), minus)
        # mirror symmetry of the side family
        assert sorted((-c.center, c.radius) for c in circles) == sorted((c.center, c.radius) for c in circles)


class TestLengthParam:
    def test_anchor(self):
        want = math.log((3 + 2 * math.sqrt(2)) / (3 - 2 * math.sqrt(2)))
        assert length_param(1, (1.0, 2.0)) == pytest.approx(want, abs=1e-12)
        assert length_param(1, (1.0, 2.0)) == pytest.approx(3.5254943, abs=1e-7)

    def test_equals_translation_length_anchor(self):
        assert abs(length_param(1, (1.0, 2.0)) - 2 * math.acosh(3)) < 1e-9

    def test_rejects_n0(self):
        with pytest.raises(IndexOutOfRange):
            length_param(0, (1.0, 2.0))

    def test_rejects_flat(self):
        with pytest.raises(ValueError):
            length_param(1, (1.0, 1.0))

    @given(positive_sequences)
    def test_against_literal_formula(self, x):
        s = sums(x)
        for n in range(1, len(s)):
            assert close(length_param(n, s), eq2_oracle(s[n - 1], s[n]))

    @given(positive_sequences)
    def test_consistent_with_translation_length(self, x):
        s = sums(x)
        for n in range(1, len(s)):
            assert close(length_param(n, s), translation_length(flute_generator(n, s)))


class TestBasmajian:
    def test_anchor(self):
        assert basmajian_term(1, (1.0, 2.0)) == pytest.approx(1 / (1 + math.sqrt(2)) ** 2, abs=1e-12)
        assert basmajian_term(1, (1.0, 2.0)) == pytest.approx(0.1715729, abs=1e-7)

    @given(positive_sequences, st.floats(min_value=0.01, max_value=100))
    def test_closed_form_and_scaling(self, x, k):
        s = sums(x)
        scaled = tuple(k * v for v in s)
        for n in range(1, len(s)):
            t = basmajian_term(n, s)
            assert abs(t - basmajian_closed_form(n, s)) <= 1e-12
            assert abs(t - basmajian_term(n, scaled)) <= 1e-12

    def test_constant_tail_like_harmonic(self):
        s = partial_sums(SequenceSpec((), ConstantTail(1)), 10_001)
        terms = [basmajian_term(n, s) for n in range(1, len(s))]
        # term_n ~ 1/(4n)
        assert terms[-1] * 4 * 10_000 == pytest.approx(1, rel=1e-3)
        assert sum(terms) > 2.0

    @pytest.mark.parametrize(
        "tail, comparison, diverges",
        [
            # constant x: term ~ 1/(4n), compare with the harmonic series
            (ConstantTail(1), lambda n: 1 / (4 * n), True),
            # harmonic x: s_n ~ ln n, term ~ 1/(4 n ln n), still divergent
            (HarmonicTail(1), lambda n: 1 / (4 * n * math.log(n)), True),
            # geometric x: s_n -> 2, term ~ x_n / 8 = 2^-n / 8, summable
            (GeometricTail(0.5, 0.5), lambda n: 0.5**n / 8, False),
        ],
    )
    def test_series_verdicts_agree(self, tail, comparison, diverges):
        spec = SequenceSpec((1,), tail)
        n_terms = 4000 if diverges else 40
        s = partial_sums(spec, n_terms)
        ratios = [basmajian_term(n, s) / comparison(n) for n in range(n_terms // 2, n_terms)]
        # comparison test: bounded ratio in both directions
        assert 0.2 < min(ratios) and max(ratios) < 5
        want = TypeVerdict.FIRST_KIND_PARABOLIC if diverges else TypeVerdict.SECOND_KIND_NON_PARABOLIC
        assert classify_type(spec).verdict is want


class TestClassifyType:
    def test_constant(self):
        assert classify_type(SequenceSpec((1,), ConstantTail(1))).verdict is TypeVerdict.FIRST_KIND_PARABOLIC

    def test_harmonic(self):
        assert classify_type(SequenceSpec((), HarmonicTail(3))).verdict is TypeVerdict.FIRST_KIND_PARABOLIC

    def test_geometric_convergent(self):
        res = classify_type(SequenceSpec((1,), GeometricTail(0.5, 0.5)))
        assert res.verdict is TypeVerdict.SECOND_KIND_NON_PARABOLIC
        assert abs(res.limit - 2.0) <= 1e-12

    def test_geometric_ratio_one_diverges(self):
        assert classify_type(SequenceSpec((), GeometricTail(1, 1))).verdict is TypeVerdict.FIRST_KIND_PARABOLIC

    def test_finite_is_unknown(self):
        assert classify_type(SequenceSpec((1, 2, 3))).verdict is TypeVerdict.UNKNOWN
        assert classify_type(SequenceSpec((1,), CustomTail(None))).verdict is TypeVerdict.UNKNOWN

    def test_custom(self):
        res = classify_type(SequenceSpec((1,), CustomTail(False, limit=3.0)))
        assert res.verdict is TypeVerdict.SECOND_KIND_NON_PARABOLIC and res.limit == 4.0


class TestConvexCore:
    def test_geometric(self):
        assert convex_core_boundary(SequenceSpec((1,), GeometricTail(0.5, 0.5))) == HalfCircle(0, 2)

    def test_first_kind(self):
        assert convex_core_boundary(SequenceSpec((1,), ConstantTail(1))) is None

    def test_unknown(self):
        with pytest.raises(UnknownType):
            convex_core_boundary(SequenceSpec((1, 1)))


class TestPolygon:
    grp = build_flute(SequenceSpec((1, 1)), 2)

    def test_far_point_inside(self):
        assert 10j in flute_polygon(self.grp)

    def test_inside_side(self):
        assert complex(0.5, 0.3) not in flute_polygon(self.grp)

    def test_on_side(self):
        assert complex(0.5, 0.5) not in flute_polygon(self.grp)
        assert complex(0.5, 0.5) in flute_polygon(self.grp, closed=True)

    def test_constraint_count(self):
        assert len(flute_polygon(self.grp).constraints) == 4

    def test_core_cut(self):
        grp = build_flute(SequenceSpec((1,), GeometricTail(0.5, 0.5)), 4)
        reg = flute_polygon(grp, with_core=True)
        assert len(reg.constraints) == 9
        assert 1.9j in reg and 2.1j not in reg


class TestIntegral:
    @pytest.mark.parametrize("x", [(1, 2, 1), (1, 1, 1, 1)])
    def test_integral(self, x):
        assert exact_integral(x)
        assert is_integral(build_flute(SequenceSpec(x), len(x)))

    def test_non_integral(self):
        x = (0.5, 0.3)
        assert not is_integral(build_flute(SequenceSpec(x), 2))
        assert not exact_integral([Fraction(1, 2), Fraction(3, 10)])
        assert flute_generator(0, (0.5,)).entries == (1, 0, -4, 1)
