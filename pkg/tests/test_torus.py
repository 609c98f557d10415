"""Torus destabilization LP, its certificates, and the enumeration oracle."""
from __future__ import annotations

from fractions import Fraction

import pytest

from hypstab import enumerate_weight_oracle, membership, parse_poly, torus_destabilize
from hypstab.linalg import rational_rank

from conftest import random_support_poly


def assert_decision_verifies(f, decision):
    """Re-check a TorusDecision from scratch."""
    n, d = f.n, f.d
    if decision.feasible:
        assert decision.witness is not None
        assert membership(f, decision.witness, decision.strict)
        return
    cert = decision.certificate
    assert cert is not None
    total = sum(lam for _, lam in cert)
    assert total == 1
    assert all(lam >= 0 for _, lam in cert)
    centroid = [Fraction(d, n + 1)] * (n + 1)
    for j in range(n + 1):
        assert sum(lam * exp[j] for exp, lam in cert) == centroid[j]
    if not decision.strict:
        assert all(lam > 0 for _, lam in cert)
        shifted = [[Fraction(e) - c for e, c in zip(exp, centroid)] for exp, _ in cert]
        assert rational_rank(shifted) == n


class TestStrictMode:
    def test_f2_feasible(self, corpus):
        decision = torus_destabilize(corpus["f2"], strict=True)
        assert decision.feasible
        assert membership(corpus["f2"], decision.witness, strict=True)

    def test_triangle_infeasible_with_point_mass(self, corpus):
        decision = torus_destabilize(corpus["triangle"], strict=True)
        assert not decision.feasible
        assert decision.certificate == (((1, 1, 1), Fraction(1)),)

    def test_fermat_infeasible(self, corpus):
        decision = torus_destabilize(corpus["fermat_cubic"], strict=True)
        assert not decision.feasible
        assert_decision_verifies(corpus["fermat_cubic"], decision)


class TestNonStrictMode:
    def test_triangle_feasible_flat_weights(self, corpus):
        decision = torus_destabilize(corpus["triangle"], strict=False)
        assert decision.feasible
        assert membership(corpus["triangle"], decision.witness, strict=False)

    def test_fermat_infeasible_with_positive_certificate(self, corpus):
        decision = torus_destabilize(corpus["fermat_cubic"], strict=False)
        assert not decision.feasible
        lambdas = dict(decision.certificate)
        assert lambdas == {
            (3, 0, 0): Fraction(1, 3),
            (0, 3, 0): Fraction(1, 3),
            (0, 0, 3): Fraction(1, 3),
        }
        assert_decision_verifies(corpus["fermat_cubic"], decision)

    def test_zero_poly_rejected(self):
        from hypstab import HomogeneousPoly

        with pytest.raises(ValueError):
            torus_destabilize(HomogeneousPoly.make(2, 3, {}), strict=False)


class TestOracle:
    def test_f2_strict_witness(self, corpus):
        witness = enumerate_weight_oracle(corpus["f2"], 5, strict=True)
        assert witness is not None
        assert membership(corpus["f2"], witness, strict=True)

    def test_fermat_nonstrict_none(self, corpus):
        assert enumerate_weight_oracle(corpus["fermat_cubic"], 12, strict=False) is None

    def test_triangle_nonstrict_witness(self, corpus):
        witness = enumerate_weight_oracle(corpus["triangle"], 2, strict=False)
        assert witness is not None
        assert membership(corpus["triangle"], witness, strict=False)

    def test_triangle_strict_none(self, corpus):
        assert enumerate_weight_oracle(corpus["triangle"], 3, strict=True) is None

    def test_lexicographic_first(self, corpus):
        # Scan order is lexicographic over the full vector; the triangle's
        # cone contains (-2, 0, 2), which precedes (1, 0, -1).
        witness = enumerate_weight_oracle(corpus["triangle"], 2, strict=False)
        assert witness.r == (-2, 0, 2)

    def test_bound_validation(self, corpus):
        with pytest.raises(ValueError):
            enumerate_weight_oracle(corpus["f2"], 0, strict=True)

    def test_two_variable_polynomial(self):
        # Binary forms have only the one free coordinate r0.
        f = parse_poly("x0^2*x1", 1)
        witness = enumerate_weight_oracle(f, 3, strict=False)
        assert witness is not None
        assert len(witness.r) == 2
        assert membership(f, witness, strict=False)
        assert enumerate_weight_oracle(parse_poly("x0^3 + x0^2*x1 + x1^3", 1), 3, False) is None


class TestAgreement:
    """LP and oracle agree on the corpus (n = 2, small degree)."""

    @pytest.mark.parametrize("strict", [True, False])
    def test_corpus_agreement(self, corpus, strict):
        for name, f in corpus.items():
            if f.n != 2 or f.d > 4:
                continue
            decision = torus_destabilize(f, strict)
            witness = enumerate_weight_oracle(f, 200, strict)
            assert decision.feasible == (witness is not None), name
            assert_decision_verifies(f, decision)

    @pytest.mark.parametrize("strict", [True, False])
    def test_random_supports_agree(self, rng, strict):
        for _ in range(30):
            n = 2
            d = rng.choice([3, 4])
            f = random_support_poly(rng, n, d)
            decision = torus_destabilize(f, strict)
            witness = enumerate_weight_oracle(f, 60, strict)
            assert decision.feasible == (witness is not None), f.terms
            assert_decision_verifies(f, decision)

    @pytest.mark.parametrize("strict", [True, False])
    def test_random_supports_agree_three_dims(self, rng, strict):
        # Extreme rays for degree <= 4 supports in four variables have small
        # entries, so a box of radius 40 is conclusive.
        for _ in range(12):
            d = rng.choice([3, 4])
            f = random_support_poly(rng, 3, d)
            decision = torus_destabilize(f, strict)
            witness = enumerate_weight_oracle(f, 40, strict)
            assert decision.feasible == (witness is not None), f.terms
            assert_decision_verifies(f, decision)
