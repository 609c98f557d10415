"""Multiplicity, tangent cones, Hessian ranks, and the singular scan."""
from __future__ import annotations

from fractions import Fraction

import pytest

from hypstab import (
    ProjectivePoint,
    RationalMatrix,
    WeightVector,
    analyze_point,
    apply_linear_change,
    essential_variable_count,
    hessian_rank_at,
    m0_threshold,
    mult_lower_bound_from_weights,
    multiplicity_at,
    parse_poly,
    rank_of_q,
    scan_singular_points,
)
from hypstab.local_analysis import PointError, is_cone, tangent_cone_at
from hypstab.polynomials import AffinePoly

from conftest import random_cone_member, random_sorted_weights


def P(*coords):
    return ProjectivePoint.make(coords)


class TestProjectivePoint:
    def test_canonicalization(self):
        assert P(Fraction(1, 2), Fraction(1, 3), 0).coords == (3, 2, 0)
        assert P(-2, 4, -6).coords == (1, -2, 3)
        assert P(0, 0, 5).coords == (0, 0, 1)

    def test_zero_rejected(self):
        with pytest.raises(PointError):
            P(0, 0, 0)


class TestMultiplicity:
    def test_f2_at_q(self, corpus):
        assert multiplicity_at(corpus["f2"], P(0, 0, 1)) == 2

    def test_g3_both_points(self):
        g3 = parse_poly("x0^2*x3^2 + x0*x2^3 + x1^4", 3)
        assert multiplicity_at(g3, P(1, 0, 0, 0)) == 2
        assert multiplicity_at(g3, P(0, 0, 0, 1)) == 2

    def test_smooth_point(self, corpus):
        assert multiplicity_at(corpus["fermat_cubic"], P(1, -1, 0)) == 1

    def test_off_hypersurface_returns_zero(self, corpus):
        assert multiplicity_at(corpus["f2"], P(1, 1, 1)) == 0

    def test_cone_vertex_full_multiplicity(self):
        cone = parse_poly("x0^3 + x1^3 + x2^3", 3)
        assert multiplicity_at(cone, P(0, 0, 0, 1)) == 3

    def test_invariance_under_stabilizing_change(self, corpus, rng):
        f = corpus["f2"]
        q = P(0, 0, 1)
        for _ in range(10):
            rows = [
                [1, rng.randint(-2, 2), rng.randint(-2, 2)],
                [0, 1, rng.randint(-2, 2)],
                [0, 0, rng.choice([1, 2, -1])],
            ]
            sigma = RationalMatrix.from_rows(rows)
            g = apply_linear_change(f, sigma)
            assert multiplicity_at(g, q) == multiplicity_at(f, q)
            assert hessian_rank_at(g, q) == hessian_rank_at(f, q)


class TestMultiplicityBoundFromWeights:
    def test_f2_certificate(self):
        assert mult_lower_bound_from_weights(WeightVector((3, 1, -4)), 3, strict=True) == 2

    def test_nonstrict_case(self):
        assert mult_lower_bound_from_weights(WeightVector((1, 0, -1)), 3, strict=False) == 2

    def test_no_inequality_fires(self):
        assert mult_lower_bound_from_weights(WeightVector((2, -1, -1)), 3, strict=False) == 1

    def test_property_members_meet_bound(self, rng):
        last = P(0, 0, 1)
        for _ in range(200):
            n = rng.randint(2, 4)
            d = rng.choice([3, 4])
            strict = rng.random() < 0.5
            r = random_sorted_weights(rng, n)
            f = random_cone_member(rng, n, d, r, strict)
            if f is None:
                continue
            bound = mult_lower_bound_from_weights(r, d, strict)
            point = ProjectivePoint.make([0] * n + [1])
            assert multiplicity_at(f, point) >= bound, (f.terms, r.r)


class TestHessianRank:
    def test_f2(self, corpus):
        assert hessian_rank_at(corpus["f2"], P(0, 0, 1)) == (1, 1)

    def test_nodal_cubic(self, corpus):
        assert hessian_rank_at(corpus["nodal_cubic"], P(0, 0, 1)) == (2, 0)

    def test_g3(self):
        g3 = parse_poly("x0^2*x3^2 + x0*x2^3 + x1^4", 3)
        rank, corank = hessian_rank_at(g3, P(0, 0, 0, 1))
        assert (rank, corank) == (1, 2)

    def test_requires_multiplicity_two(self, corpus):
        with pytest.raises(PointError, match="multiplicity"):
            hessian_rank_at(corpus["fermat_cubic"], P(1, -1, 0))

    def test_coherence_with_rank_of_q(self, rng):
        # With no linear chart part, the chart quadratic part is exactly the
        # x_n^(d-2) coefficient.
        for _ in range(50):
            n = rng.randint(2, 4)
            d = rng.choice([3, 4])
            r = random_sorted_weights(rng, n)
            f = random_cone_member(rng, n, d, r, strict=False)
            if f is None:
                continue
            unit_last = tuple(int(j == n) for j in range(n + 1))
            has_linear = any(
                exp[n] == d - 1 and exp != unit_last for exp, _ in f.terms
            )
            if has_linear or rank_of_q(f) == 0:
                continue
            point = ProjectivePoint.make([0] * n + [1])
            if multiplicity_at(f, point) != 2:
                continue
            assert hessian_rank_at(f, point)[0] == rank_of_q(f)


class TestRankOfQ:
    def test_examples(self, corpus):
        g3 = parse_poly("x0^2*x3^2 + x0*x2^3 + x1^4", 3)
        assert rank_of_q(g3) == 1
        assert rank_of_q(corpus["f2"]) == 1
        assert rank_of_q(corpus["fermat_cubic"]) == 0

    def test_full_rank(self):
        f = parse_poly("x0^2*x2 + x1^2*x2 + x0^3", 2)
        assert rank_of_q(f) == 2

    def test_bounded_by_weight_threshold(self, rng):
        for _ in range(200):
            n = rng.randint(2, 5)
            d = rng.choice([3, 4])
            strict = rng.random() < 0.5
            r = random_sorted_weights(rng, n)
            f = random_cone_member(rng, n, d, r, strict)
            if f is None:
                continue
            # Strict members pair with the non-strict threshold and conversely.
            limit = m0_threshold(n, d, strict=not strict)
            assert rank_of_q(f) <= limit, (f.terms, r.r)


class TestM0Threshold:
    def test_examples(self):
        assert m0_threshold(3, 4, strict=True) == 2
        assert m0_threshold(3, 4, strict=False) == 1
        assert m0_threshold(2, 3, strict=True) == 2

    def test_validation(self):
        with pytest.raises(ValueError):
            m0_threshold(1, 3, strict=True)


class TestEssentialVariables:
    def test_product_is_cone_in_three_vars(self):
        h = AffinePoly.make(3, {(1, 1, 0): 1})
        assert essential_variable_count(h) == 2
        assert is_cone(h)

    def test_full_quadric_not_cone(self):
        h = AffinePoly.make(3, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
        assert essential_variable_count(h) == 3
        assert not is_cone(h)

    def test_perfect_square_is_cone(self):
        h = AffinePoly.make(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
        assert essential_variable_count(h) == 1
        assert is_cone(h)

    def test_zero_rejected(self):
        with pytest.raises(Exception):
            essential_variable_count(AffinePoly.make(2, {}))


class TestScan:
    def test_f2(self, corpus):
        scan = scan_singular_points(corpus["f2"], 2)
        assert [p.coords for p in scan.points] == [(0, 0, 1)]

    def test_g3(self):
        g3 = parse_poly("x0^2*x3^2 + x0*x2^3 + x1^4", 3)
        scan = scan_singular_points(g3, 2)
        assert [p.coords for p in scan.points] == [(0, 0, 0, 1), (1, 0, 0, 0)]

    def test_smooth_fermat(self, corpus):
        assert scan_singular_points(corpus["fermat_cubic"], 3).points == ()

    def test_finite_field_counts(self, corpus):
        scan = scan_singular_points(corpus["f2"], 2, field_sizes=(3, 5))
        # One rational singular point, isolated: small constant counts.
        assert scan.field_counts[3] >= 1
        assert scan.field_counts[5] >= 1

    def test_positive_dimensional_locus_shows_up(self):
        # x0^2 * x1 (as a cubic in P^2, via x0^2*x1): singular along x0 = 0.
        f = parse_poly("x0^2*x1", 2)
        scan = scan_singular_points(f, 2, field_sizes=(5,))
        assert len(scan.points) >= 3  # a line's worth of small points
        assert scan.field_counts[5] == 5 + 1  # P^1 over F_5


class TestAnalyzePoint:
    def test_local_data_fields(self, corpus):
        data = analyze_point(corpus["f2"], P(0, 0, 1))
        assert data.multiplicity == 2
        assert data.hessian_rank == 1 and data.hessian_corank == 1
        assert str(data.tangent_cone) == "x0^2"

    def test_tangent_cone_cubic_point(self):
        cone = parse_poly("x0^3 + x1^3 + x2^3", 3)
        data = analyze_point(cone, P(0, 0, 0, 1))
        assert data.multiplicity == 3
        assert data.hessian_rank is None
        assert not tangent_cone_at(cone, P(0, 0, 0, 1)).is_zero
