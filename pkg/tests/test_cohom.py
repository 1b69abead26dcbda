import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toric_oracle import toric_cohomology
from ulrich_ruled.cohom import (
    CohomologyVector,
    H0Bounds,
    Mode,
    RaynaudStatus,
    clifford_upper,
    h0_line_generic,
    h0_sym_bounds,
    oracle_cohomology_g0,
    raynaud_status,
)
from ulrich_ruled.errors import IntegralityError, ValidationError
from ulrich_ruled.surface import DivisorClass, RuledSurfaceParams, chi, serre_dual_class


def grid(limit):
    span = range(-limit, limit + 1)
    return [DivisorClass(a, b) for a, b in itertools.product(span, span)]


def p1_direct(t, b, e):
    """h^0, h^1 of the split bundle sum_{i=0..t} O(b - i e) on the projective line."""
    h0 = h1 = 0
    for i in range(t + 1):
        n = b - i * e
        if n >= 0:
            h0 += n + 1
        elif n <= -2:
            h1 += -n - 1
    return h0, h1


class TestLineModels:
    @pytest.mark.parametrize("g,d,expected", [(1, 0, 0), (0, 3, 4), (2, 5, 4), (3, 1, 0), (0, -1, 0)])
    def test_generic(self, g, d, expected):
        assert h0_line_generic(g, d) == expected

    @pytest.mark.parametrize("g,d,expected", [(3, 2, 2), (2, -1, 0), (2, 4, 3), (1, 0, 1), (4, 6, 4), (0, 0, 1)])
    def test_clifford(self, g, d, expected):
        assert clifford_upper(g, d) == expected

    @given(st.integers(0, 10), st.integers(-30, 30))
    def test_generic_below_clifford(self, g, d):
        assert h0_line_generic(g, d) <= clifford_upper(g, d)

    def test_negative_genus(self):
        with pytest.raises(ValidationError):
            h0_line_generic(-1, 2)


class TestSymBounds:
    def test_split_example(self):
        assert h0_sym_bounds(RuledSurfaceParams(0, 2), 2, 0) == H0Bounds(1, 1)

    def test_generic_example(self):
        # pieces of degree -1, 0, 1 on an elliptic curve
        assert h0_sym_bounds(RuledSurfaceParams(1, -1), 2, -1) == H0Bounds(0, 1)

    @given(st.integers(0, 6), st.integers(-20, 20))
    def test_t_zero(self, g, d):
        s = RuledSurfaceParams(g, 0)
        bounds = h0_sym_bounds(s, 0, d)
        assert bounds.lo == bounds.hi == h0_line_generic(g, d)

    @given(st.integers(1, 6), st.integers(0, 6), st.integers(-20, 20), st.integers(-6, 6))
    def test_clifford_model_is_weaker(self, g, t, d, e):
        s = RuledSurfaceParams(g, max(e, -g))
        generic = h0_sym_bounds(s, t, d, "generic")
        worst = h0_sym_bounds(s, t, d, "clifford")
        assert generic.lo == worst.lo
        assert generic.hi <= worst.hi

    def test_rejects(self):
        with pytest.raises(ValidationError):
            h0_sym_bounds(RuledSurfaceParams(1, 0), -1, 0)
        with pytest.raises(ValidationError):
            h0_sym_bounds(RuledSurfaceParams(1, 0), 1, 0, "exact")

    @pytest.mark.parametrize("e", range(5))
    def test_sandwich_genus0(self, e):
        s = RuledSurfaceParams(0, e)
        for t in range(0, 11):
            for b in range(-10, 11):
                bounds = h0_sym_bounds(s, t, b)
                h0 = oracle_cohomology_g0(s, DivisorClass(t, b)).h0
                assert h0 in bounds
                assert h0 == bounds.hi
                assert max(0, b + 1) <= h0


class TestOracle:
    def test_quadric_hyperplane(self):
        assert oracle_cohomology_g0(0, DivisorClass(1, 1)) == CohomologyVector(4, 0, 0)

    def test_pullback_of_minus_one(self):
        assert oracle_cohomology_g0(0, DivisorClass(0, -1)).as_tuple() == (0, 0, 0)

    def test_f2_example(self):
        v = oracle_cohomology_g0(2, DivisorClass(2, 0))
        # pieces O(0), O(-2), O(-4): h0 = 1, h1 = 0 + 1 + 3
        assert v.as_tuple() == (1, 4, 0)
        assert v.mode is Mode.EXACT
        assert v.euler == chi(RuledSurfaceParams(0, 2), DivisorClass(2, 0))

    def test_rejects_positive_genus(self):
        with pytest.raises(ValidationError):
            oracle_cohomology_g0(RuledSurfaceParams(1, 0), DivisorClass(0, 0))

    @pytest.mark.parametrize("e", range(5))
    def test_matches_toric_cech(self, e):
        s = RuledSurfaceParams(0, e)
        for d in grid(10):
            assert oracle_cohomology_g0(s, d).as_tuple() == toric_cohomology(e, d.a, d.b), d

    @pytest.mark.parametrize("e", range(5))
    def test_serre_duality_and_chi(self, e):
        s = RuledSurfaceParams(0, e)
        for d in grid(10):
            v = oracle_cohomology_g0(s, d)
            w = oracle_cohomology_g0(s, serre_dual_class(s, d))
            assert (v.h0, v.h1, v.h2) == (w.h2, w.h1, w.h0)
            assert v.euler == chi(s, d)

    @pytest.mark.parametrize("e", range(5))
    def test_projection_formula(self, e):
        s = RuledSurfaceParams(0, e)
        for t in range(0, 11):
            for b in range(-10, 11):
                v = oracle_cohomology_g0(s, DivisorClass(t, b))
                assert (v.h0, v.h1, v.h2) == (*p1_direct(t, b, e), 0)

    @pytest.mark.parametrize("e", range(5))
    def test_h0_monotone_in_b(self, e):
        s = RuledSurfaceParams(0, e)
        for t in range(0, 8):
            values = [oracle_cohomology_g0(s, DivisorClass(t, b)).h0 for b in range(-12, 13)]
            assert values == sorted(values)


class TestRaynaud:
    @pytest.mark.parametrize(
        "g,e,a,status",
        [
            (1, -1, 3, RaynaudStatus.HOLDS),
            (1, -1, 7, RaynaudStatus.HOLDS),
            (2, -2, 3, RaynaudStatus.HOLDS),
            (5, -4, 2, RaynaudStatus.HOLDS),
            (5, -3, 3, RaynaudStatus.HOLDS_GENERIC),
            (5, -2, 6, RaynaudStatus.UNKNOWN),
            (3, 0, 4, RaynaudStatus.HOLDS),
            (2, 5, 1, RaynaudStatus.HOLDS),
            (2, 2, 3, RaynaudStatus.FAILS),
        ],
    )
    def test_cases(self, g, e, a, status):
        verdict = raynaud_status(RuledSurfaceParams(g, e), a)
        assert verdict.status is status
        assert verdict.citation

    def test_odd_twist_degree(self):
        with pytest.raises(IntegralityError):
            raynaud_status(RuledSurfaceParams(1, -1), 2)
