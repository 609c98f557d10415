"""Normalization of cubic destabilization certificates.

Given a cubic ``f`` all of whose support weights are non-negative for a
sorted weight vector ``r``, produce a coordinate change ``sigma`` and a new
weight vector ``r'`` with ``r'_0 + 2 r'_n < 0`` and ``sigma(f)`` still in the
non-negative weight cone.  That inequality forces the last coordinate point
to be singular on the transformed hypersurface, which is what downstream
arguments need.

When ``r_0 + 2 r_n < 0`` already holds nothing is done.  Otherwise a sorted
valid ``r`` is forced into the shape ``(2a, 0, ..., 0, -a, -a)``; the
construction then rewrites ``f`` as ``x_n * x_0 * l + (cubic without x_n)``
after an exact 2x2 change in the last two coordinates, and substitutes the
linear form ``l`` by ``x_1``.

The function is intentionally partial over the rationals: a middle weight
below zero signals a singular locus of positive dimension, and a rank-2
quadratic part with non-square discriminant has no rational isotropic
direction (the distinguished singular points are irrational), so both raise
:class:`CubicNormalizationError` rather than guessing.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .linalg import RationalMatrix, apply_linear_change
from .polynomials import HomogeneousPoly
from .weights import WeightVector, membership


class CubicNormalizationError(ValueError):
    """The normalization's structural assumptions fail over the rationals."""


def _is_rational_square(x: Fraction) -> tuple[bool, Fraction]:
    if x < 0:
        return False, Fraction(0)
    num_root = isqrt(x.numerator)
    den_root = isqrt(x.denominator)
    if num_root * num_root == x.numerator and den_root * den_root == x.denominator:
        return True, Fraction(num_root, den_root)
    return False, Fraction(0)


def _last_two_change(f: HomogeneousPoly) -> RationalMatrix:
    """2x2 change in the last two coordinates killing the x_0*x_n^2 term.

    The quadratic q = alpha*y^2 + beta*y*z + gamma*z^2 read off the
    coefficients of x_0*x_{n-1}^2, x_0*x_{n-1}*x_n, x_0*x_n^2 must acquire a
    zero z^2 coefficient, i.e. the second row of the block must be a rational
    zero of q.
    """
    n = f.n
    size = n + 1

    def coeff_of(e_top: int, e_mid: int, e_last: int) -> Fraction:
        exp = [0] * size
        exp[0] = e_top
        exp[n - 1] += e_mid
        exp[n] += e_last
        return f.coefficient(tuple(exp))

    alpha = coeff_of(1, 2, 0)
    beta = coeff_of(1, 1, 1)
    gamma = coeff_of(1, 0, 2)

    if gamma == 0:
        return RationalMatrix.identity(size)

    disc = beta * beta - 4 * alpha * gamma
    ok, root = _is_rational_square(disc)
    if not ok:
        raise CubicNormalizationError(
            "the quadratic part in the last two coordinates has no rational "
            f"isotropic direction (discriminant {disc} is not a square); its "
            "distinguished singular points have irrational coordinates"
        )
    e_val = (-beta + root) / (2 * gamma)
    rows = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    if e_val != 0:
        rows[n - 1][n - 1], rows[n - 1][n] = Fraction(1), Fraction(0)
    else:
        rows[n - 1][n - 1], rows[n - 1][n] = Fraction(0), Fraction(1)
    rows[n][n - 1], rows[n][n] = Fraction(1), e_val
    return RationalMatrix.from_rows(rows)


def _linear_form_through_last(g: HomogeneousPoly) -> list[Fraction]:
    """Coefficients c with g = x_n * x_0 * (sum_j c_j x_j) + (terms without
    x_n); raises when g has a different shape."""
    n = g.n
    coeffs = [Fraction(0)] * n
    for exp, c in g.terms:
        if exp[n] == 0:
            continue
        if exp[n] != 1 or exp[0] == 0:
            raise CubicNormalizationError(
                f"monomial {exp} involving the last coordinate is not of the "
                "form x_n * x_0 * (variable)"
            )
        residual = list(exp)
        residual[n] -= 1
        residual[0] -= 1
        hot = [j for j, e in enumerate(residual) if e != 0]
        if sum(residual) != 1 or len(hot) != 1 or hot[0] >= n:
            raise CubicNormalizationError(
                f"monomial {exp} involving the last coordinate is not of the "
                "form x_n * x_0 * (variable)"
            )
        coeffs[hot[0]] += c
    return coeffs


def _substitute_form_by_x1(coeffs: list[Fraction], size: int) -> RationalMatrix:
    """Invertible change making the linear form sum c_j x_j become x_1.

    When the form is zero or a multiple of x_0 no substitution is needed.
    """
    pivot = next((j for j in range(1, len(coeffs)) if coeffs[j] != 0), None)
    if pivot is None:
        return RationalMatrix.identity(size)
    columns = [[Fraction(int(i == j)) for i in range(size)] for j in range(size)]
    if pivot == 1:
        col = [Fraction(0)] * size
        col[1] = 1 / coeffs[1]
        for j in range(len(coeffs)):
            if j != 1 and coeffs[j] != 0:
                col[j] = -coeffs[j] / coeffs[1]
        columns[1] = col
    else:
        # x_1 and x_pivot trade roles; c_1 = 0 by choice of pivot.
        columns[1] = [Fraction(int(i == pivot)) for i in range(size)]
        col = [Fraction(0)] * size
        col[1] = 1 / coeffs[pivot]
        for j in range(len(coeffs)):
            if j not in (1, pivot) and coeffs[j] != 0:
                col[j] = -coeffs[j] / coeffs[pivot]
        columns[pivot] = col
    rows = [[columns[j][i] for j in range(size)] for i in range(size)]
    return RationalMatrix.from_rows(rows)


def normalize_cubic_certificate(
    f: HomogeneousPoly, r: WeightVector
) -> tuple[RationalMatrix, WeightVector]:
    """Return (sigma, r') with sigma(f) in the non-negative cone of r' and
    r'_0 + 2 r'_n < 0; identity when r already satisfies the inequality.

    Requires d = 3, sorted r, and f in the non-negative weight cone of r.
    The caller asserts a finite singular locus; a violated structural
    assumption raises :class:`CubicNormalizationError` naming the failing
    clause instead of guessing.
    """
    if f.d != 3:
        raise CubicNormalizationError(f"normalization applies to cubics only, got degree {f.d}")
    if len(r) != f.n + 1:
        raise CubicNormalizationError("weight vector length does not match the polynomial")
    if not r.is_sorted:
        raise CubicNormalizationError(f"weight vector {r} must be sorted non-increasingly")
    if not membership(f, r, strict=False):
        raise CubicNormalizationError("f is not in the non-negative weight cone of r")

    n = f.n
    size = n + 1
    if r[0] + 2 * r[n] < 0:
        return RationalMatrix.identity(size), r

    if n >= 3 and r[n - 2] < 0:
        raise CubicNormalizationError(
            f"middle weight r_{n - 2} = {r[n - 2]} is negative while r_0 + 2 r_n >= 0; "
            "this happens only when the singular locus has positive dimension "
            "or the certificate data is mismatched"
        )

    reduced = r.reduced()
    a = reduced[0]
    expected = (a,) + (0,) * (n - 2) + (-a // 2, -a // 2)
    if a % 2 != 0 or reduced.r != expected:
        raise CubicNormalizationError(
            f"sorted weights {r} with r_0 + 2 r_n >= 0 must reduce to the "
            "(2a, 0, ..., 0, -a, -a) family"
        )

    sigma_q = _last_two_change(f)
    g = apply_linear_change(f, sigma_q)
    coeffs = _linear_form_through_last(g)
    sigma_l = _substitute_form_by_x1(coeffs, size)
    sigma = sigma_l @ sigma_q

    r_prime = WeightVector((1, 1) + (0,) * (n - 2) + (-2,))
    transformed = apply_linear_change(f, sigma)
    if not membership(transformed, r_prime, strict=False):
        raise CubicNormalizationError(
            "normalized polynomial left the non-negative weight cone; "
            "the input does not satisfy the construction's hypotheses"
        )
    assert r_prime[0] + 2 * r_prime[n] < 0
    return sigma, r_prime
