"""Closed-form sufficient stability criteria from singularity data.

All comparisons are exact.  The one irrational threshold (a square root in
the degree form of the multiplicity criterion) is decided by sign-checked
squaring, never by floating point.

Convention adopted throughout: a strict inequality yields Stable and the
boundary case yields SemiStable.  The two printed pairings of the
multiplicity criterion disagree in the source material; the reading used
here is the one consistent with its degree form and with the d >= 5
consequence for isolated double points, and every multiplicity-bound reason
records it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .literature import literature_lookup
from .verdicts import (
    InternalConsistencyError,
    Reason,
    StabilityVerdict,
    Status,
    strongest_positive,
)

_PAIRING_NOTE = "strict inequality gives Stable, equality gives SemiStable"


class ProfileError(ValueError):
    """Inconsistent singularity profile or inapplicable criterion."""


@dataclass(frozen=True)
class SingularityProfile:
    """Singularity data of a hypersurface: ambient dimension ``n``, degree
    ``d``, singular-locus dimension ``s`` (-1 means smooth), maximal
    multiplicity ``delta``, and optionally the minimum Hessian rank over the
    singular points (meaningful only when all have multiplicity 2).

    ``provenance`` tags each datum as user-asserted, verified-at-points, or
    heuristic; criteria evaluate the numbers as given and reports carry the
    tags through.
    """

    n: int
    d: int
    s: int
    delta: int
    min_hessian_rank: int | None = None
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.n < 2:
            raise ProfileError(f"n must be >= 2, got {self.n}")
        if self.d < 3:
            raise ProfileError(f"d must be >= 3, got {self.d}")
        if not -1 <= self.s <= self.n - 1:
            raise ProfileError(f"s = {self.s} out of range -1..{self.n - 1}")
        if self.delta < 1:
            raise ProfileError(f"delta must be >= 1, got {self.delta}")
        if self.s == -1 and self.delta != 1:
            raise ProfileError("smooth profile requires delta = 1")
        if self.min_hessian_rank is not None:
            if self.delta > 2:
                raise ProfileError("Hessian rank is only meaningful when delta <= 2")
            if not 0 <= self.min_hessian_rank <= self.n:
                raise ProfileError(f"Hessian rank {self.min_hessian_rank} out of range 0..{self.n}")

    @property
    def is_smooth(self) -> bool:
        return self.s == -1

    @property
    def corank(self) -> int | None:
        if self.min_hessian_rank is None:
            return None
        return self.n - self.min_hessian_rank

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "s": self.s,
            "delta": self.delta,
            "min_hessian_rank": self.min_hessian_rank,
            "provenance": dict(self.provenance),
        }


@dataclass(frozen=True)
class AlgebraicThreshold:
    """Number of the form ``base + sqrt(radicand)`` with rational parts,
    compared against rationals exactly by sign-checked squaring."""

    base: Fraction
    radicand: Fraction

    def __post_init__(self):
        if self.radicand < 0:
            raise ValueError("negative radicand")

    def compare_to(self, value: Fraction | int) -> int:
        """-1, 0, or +1 as the threshold is less than, equal to, or greater
        than ``value``."""
        t = Fraction(value) - self.base
        if t < 0:
            return 1
        t_sq = t * t
        if t_sq > self.radicand:
            return -1
        if t_sq == self.radicand:
            return 0
        return 1

    def __float__(self) -> float:
        return float(self.base) + float(self.radicand) ** 0.5

    def __str__(self) -> str:
        return f"{self.base} + sqrt({self.radicand})"


def _smooth_verdict(p: SingularityProfile) -> StabilityVerdict:
    return StabilityVerdict(
        Status.STABLE,
        [Reason(criterion="smooth", note=f"smooth hypersurfaces of degree {p.d} >= 3 are stable")],
    )


def evaluate_multiplicity_bound(p: SingularityProfile) -> StabilityVerdict:
    """Maximal multiplicity against d(d-2)/((s+2)d-(s+3)), or d/(n+1) when the
    singular locus has the largest possible dimension."""
    if p.is_smooth:
        return _smooth_verdict(p)
    if p.s <= p.n - 2:
        threshold = Fraction(p.d * (p.d - 2), (p.s + 2) * p.d - (p.s + 3))
        branch = "isolated-or-small singular locus"
    else:
        threshold = Fraction(p.d, p.n + 1)
        branch = "maximal-dimension singular locus"
    margin = threshold - p.delta
    if margin > 0:
        status = Status.STABLE
    elif margin == 0:
        status = Status.SEMISTABLE
    else:
        status = Status.INCONCLUSIVE
    reason = Reason(
        criterion="multiplicity-bound",
        margin=margin,
        note=f"delta = {p.delta} vs {threshold} ({branch}); {_PAIRING_NOTE}",
        inputs={"delta": p.delta, "threshold": threshold, "s": p.s},
    )
    return StabilityVerdict(status, [reason])


def degree_threshold(delta: int, s: int) -> AlgebraicThreshold:
    """The degree bound 1 + a + sqrt(a^2 - delta + 1) with a = delta(s+2)/2."""
    a = Fraction(delta * (s + 2), 2)
    return AlgebraicThreshold(base=1 + a, radicand=a * a - delta + 1)


def evaluate_degree_bound(p: SingularityProfile) -> StabilityVerdict:
    """Degree form equivalent to the multiplicity bound: compares d against
    an irrational threshold, exactly."""
    if p.is_smooth:
        return _smooth_verdict(p)
    if p.s <= p.n - 2:
        threshold = degree_threshold(p.delta, p.s)
        cmp = threshold.compare_to(p.d)
        desc = str(threshold)
    else:
        bound = p.delta * (p.n + 1)
        cmp = -1 if p.d > bound else (0 if p.d == bound else 1)
        desc = str(bound)
    if cmp < 0:
        status = Status.STABLE
    elif cmp == 0:
        status = Status.SEMISTABLE
    else:
        status = Status.INCONCLUSIVE
    reason = Reason(
        criterion="degree-bound",
        margin="0" if cmp == 0 else None,
        note=f"d = {p.d} vs {desc}; {_PAIRING_NOTE}",
        inputs={"d": p.d, "threshold": desc, "s": p.s},
    )
    return StabilityVerdict(status, [reason])


def _require_double_point_profile(p: SingularityProfile, criterion: str) -> None:
    problems = []
    if p.d not in (3, 4):
        problems.append(f"d must be 3 or 4, got {p.d}")
    if p.s != 0:
        problems.append(f"s must be 0, got {p.s}")
    if p.delta != 2:
        problems.append(f"delta must be 2, got {p.delta}")
    if p.min_hessian_rank is None:
        problems.append("min_hessian_rank is required")
    if problems:
        raise ProfileError(f"{criterion} inapplicable: " + "; ".join(problems))


def evaluate_hessian_rank_bound(p: SingularityProfile) -> StabilityVerdict:
    """Minimum Hessian rank against 2(n+1)/d for isolated double points in
    degree 3 or 4."""
    _require_double_point_profile(p, "hessian-rank")
    threshold = Fraction(2 * (p.n + 1), p.d)
    margin = Fraction(p.min_hessian_rank) - threshold
    if margin > 0:
        status, note = Status.STABLE, f"rank {p.min_hessian_rank} > {threshold}"
    elif margin == 0:
        status, note = Status.SEMISTABLE, f"equality: rank {p.min_hessian_rank} = {threshold}"
    else:
        status, note = Status.INCONCLUSIVE, f"rank {p.min_hessian_rank} < {threshold}"
    return StabilityVerdict(
        status,
        [
            Reason(
                criterion="hessian-rank",
                margin=margin,
                note=note,
                inputs={"rank": p.min_hessian_rank, "threshold": threshold},
            )
        ],
    )


def evaluate_hessian_corank_bound(p: SingularityProfile) -> StabilityVerdict:
    """Corank form of the Hessian-rank criterion: corank against (n-2)/3 in
    degree 3 and (n-1)/2 in degree 4."""
    _require_double_point_profile(p, "hessian-corank")
    cr = p.corank
    threshold = Fraction(p.n - 2, 3) if p.d == 3 else Fraction(p.n - 1, 2)
    margin = threshold - cr
    if margin > 0:
        status, note = Status.STABLE, f"corank {cr} < {threshold}"
    elif margin == 0:
        status, note = Status.SEMISTABLE, f"equality: corank {cr} = {threshold}"
    else:
        status, note = Status.INCONCLUSIVE, f"corank {cr} > {threshold}"
    return StabilityVerdict(
        status,
        [
            Reason(
                criterion="hessian-corank",
                margin=margin,
                note=note,
                inputs={"corank": cr, "threshold": threshold},
            )
        ],
    )


def evaluate_mordant(p: SingularityProfile, cone_free: bool) -> StabilityVerdict:
    """Mordant's thresholds: d >= delta*min(n+1, s+3) gives SemiStable and a
    strict inequality gives Stable; with the tangent-cone hypothesis the
    factor drops to delta - 1."""
    if p.is_smooth:
        return _smooth_verdict(p)
    reasons = []
    statuses = []

    bound1 = p.delta * min(p.n + 1, p.s + 3)
    if p.d > bound1:
        st1 = Status.STABLE
    elif p.d == bound1:
        st1 = Status.SEMISTABLE
    else:
        st1 = Status.INCONCLUSIVE
    statuses.append(st1)
    reasons.append(
        Reason(
            criterion="mordant-multiplicity",
            margin=Fraction(p.d - bound1),
            note=f"d = {p.d} vs delta*min(n+1, s+3) = {bound1}",
            inputs={"threshold": bound1},
        )
    )

    if cone_free:
        bound2 = (p.delta - 1) * min(p.n + 1, p.s + 3)
        if p.d > bound2:
            st2 = Status.STABLE
        elif p.d == bound2:
            st2 = Status.SEMISTABLE
        else:
            st2 = Status.INCONCLUSIVE
        statuses.append(st2)
        reasons.append(
            Reason(
                criterion="mordant-tangent-cone",
                margin=Fraction(p.d - bound2),
                note=f"tangent cones are not cones over hyperplane hypersurfaces; "
                f"d = {p.d} vs (delta-1)*min(n+1, s+3) = {bound2}",
                inputs={"threshold": bound2},
            )
        )

    return StabilityVerdict(strongest_positive(statuses), reasons)


@dataclass(frozen=True)
class BoundComparison:
    new_threshold: AlgebraicThreshold
    mordant_threshold: int
    strictly_better: bool

    def to_json(self) -> dict:
        return {
            "new_threshold": str(self.new_threshold),
            "mordant_threshold": self.mordant_threshold,
            "strictly_better": self.strictly_better,
        }


def compare_bounds(delta: int, s: int) -> BoundComparison:
    """Exact comparison of the degree threshold against delta*(s+3)."""
    if delta < 1 or s < 0:
        raise ValueError("need delta >= 1 and s >= 0")
    new = degree_threshold(delta, s)
    mordant = delta * (s + 3)
    return BoundComparison(new, mordant, new.compare_to(mordant) < 0)


def derived_singularity_classes(p: SingularityProfile) -> tuple[str, ...]:
    """Class tags derivable from the profile alone, most specific first.

    Corank-0 isolated double points are ordinary nodes (A1), hence also fall
    under every published superclass (Am, ADE).  Deeper classes need a user
    assertion and are not guessed."""
    if p.is_smooth:
        return ("smooth",)
    if p.s == 0 and p.delta == 2 and p.corank == 0:
        return ("A1", "Am", "ADE")
    return ()


def combined_verdict(p: SingularityProfile, cone_free: bool | None = None) -> StabilityVerdict:
    """Strongest conclusion over every applicable sufficient criterion.

    The two forms of the multiplicity criterion, and the rank and corank
    forms of the Hessian criterion, are evaluated independently and must
    agree; disagreement raises :class:`InternalConsistencyError`.
    """
    if p.is_smooth:
        return _smooth_verdict(p)

    reasons: list[Reason] = []
    statuses: list[Status] = []
    literature_source = None

    v_mult = evaluate_multiplicity_bound(p)
    v_deg = evaluate_degree_bound(p)
    if v_mult.status != v_deg.status:
        raise InternalConsistencyError(
            f"multiplicity-bound gave {v_mult.status.value} but degree-bound gave "
            f"{v_deg.status.value} on {p}"
        )
    reasons.extend(v_mult.reasons)
    reasons.extend(v_deg.reasons)
    statuses.append(v_mult.status)

    if p.d in (3, 4) and p.s == 0 and p.delta == 2 and p.min_hessian_rank is not None:
        v_rank = evaluate_hessian_rank_bound(p)
        v_corank = evaluate_hessian_corank_bound(p)
        if v_rank.status != v_corank.status:
            raise InternalConsistencyError(
                f"hessian-rank gave {v_rank.status.value} but hessian-corank gave "
                f"{v_corank.status.value} on {p}"
            )
        reasons.extend(v_rank.reasons)
        reasons.extend(v_corank.reasons)
        statuses.append(v_rank.status)

    v_mordant = evaluate_mordant(p, bool(cone_free))
    reasons.extend(v_mordant.reasons)
    statuses.append(v_mordant.status)

    for tag in derived_singularity_classes(p):
        lit = literature_lookup(p.n, p.d, tag)
        if lit is not None:
            reasons.extend(lit.reasons)
            statuses.append(lit.status)
            literature_source = lit.literature
            break

    return StabilityVerdict(strongest_positive(statuses), reasons, literature=literature_source)
