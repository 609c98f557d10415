"""Analysis pipeline and machine-readable reports.

The analyze pipeline: scan for rational singular points, compute local
invariants at found and supplied points, build a singularity profile (with
per-field provenance: user-asserted, verified-at-points, or heuristic), run
every sufficient criterion, then search for destabilization certificates.
Negative claims always carry an exactly verified certificate; positive
claims inherit the profile's provenance.  A verified certificate beats a
profile-based positive claim, and the conflict is surfaced in the report
rather than silently resolved.
"""
from __future__ import annotations

import datetime
from dataclasses import dataclass, field

from . import __version__
from .criteria import SingularityProfile, combined_verdict
from .local_analysis import (
    LocalData,
    ProjectivePoint,
    ScanResult,
    analyze_point,
    is_cone,
    scan_singular_points,
)
from .polynomials import HomogeneousPoly, format_poly
from .search import SearchConfig, SearchOutcome, search_destabilization
from .verdicts import Reason, StabilityVerdict, Status

SCHEMA = "hypstab-report/1"


@dataclass
class AnalysisOptions:
    s: int | None = None
    extra_points: tuple[ProjectivePoint, ...] = ()
    height: int = 3
    field_sizes: tuple[int, ...] = ()
    search: SearchConfig = field(default_factory=SearchConfig)
    timestamp: bool = True


@dataclass
class AnalysisReport:
    polynomial: HomogeneousPoly
    scan: ScanResult
    points: list[LocalData]
    profile: SingularityProfile
    cone_free: bool | None
    criteria: StabilityVerdict
    search_outcome: SearchOutcome
    status: Status
    reasons: list[Reason]
    conflicts: list[str]
    seed: int
    timestamp: str | None

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA,
            "version": __version__,
            "seed": self.seed,
            "input": {
                "polynomial": format_poly(self.polynomial),
                "n": self.polynomial.n,
                "d": self.polynomial.d,
            },
            "scan": self.scan.to_json(),
            "points": [p.to_json() for p in self.points],
            "profile": self.profile.to_json(),
            "cone_free": self.cone_free,
            "criteria": self.criteria.to_json(),
            "search": {
                "budget": self.search_outcome.frames_tried,
                "strict_certificate": (
                    self.search_outcome.strict.to_json() if self.search_outcome.strict else None
                ),
                "nonstrict_certificate": (
                    self.search_outcome.nonstrict.to_json()
                    if self.search_outcome.nonstrict
                    else None
                ),
                "frames": [fr.to_json() for fr in self.search_outcome.frames],
            },
            "status": self.status.value,
            "reasons": [r.to_json() for r in self.reasons],
            "conflicts": list(self.conflicts),
        }
        if self.timestamp is not None:
            out["timestamp"] = self.timestamp
        return out

    def to_text(self) -> str:
        lines = [
            f"polynomial: {format_poly(self.polynomial)}  (n = {self.polynomial.n}, "
            f"d = {self.polynomial.d})",
            f"rational singular points (height <= {self.scan.height_bound}): "
            + (", ".join(str(p.point) for p in self.points) if self.points else "none found"),
        ]
        for p in self.points:
            extra = (
                f", Hessian rank {p.hessian_rank} (corank {p.hessian_corank})"
                if p.hessian_rank is not None
                else ""
            )
            lines.append(f"  {p.point}: multiplicity {p.multiplicity}{extra}")
        prof = self.profile
        lines.append(
            f"profile: s = {prof.s}, delta = {prof.delta}, "
            f"min Hessian rank = {prof.min_hessian_rank} "
            f"(provenance: {prof.provenance})"
        )
        lines.append("criteria verdict: " + str(self.criteria).replace("\n", "\n  "))
        so = self.search_outcome
        if so.strict:
            lines.append(f"strict certificate found: r = {so.strict.r}")
        elif so.nonstrict:
            lines.append(
                f"non-strict certificate found: r = {so.nonstrict.r}; "
                f"no strict certificate within budget ({so.frames_tried} frames)"
            )
        else:
            lines.append(f"no certificate found within budget ({so.frames_tried} frames)")
        for c in self.conflicts:
            lines.append(f"CONFLICT: {c}")
        lines.append(f"status: {self.status.value}")
        return "\n".join(lines)


def build_profile(
    singular: list[LocalData], n: int, d: int, s_user: int | None
) -> tuple[SingularityProfile, bool | None]:
    """Profile and tangent-cone summary from analyzed singular points.

    Everything not asserted by the user is tagged heuristic: the scan only
    sees rational points of bounded height.
    """
    provenance = {}
    if not singular:
        if s_user is not None and s_user != -1:
            raise ValueError(
                f"--s {s_user} asserted but no singular points were found to analyze"
            )
        provenance["s"] = "user-asserted" if s_user is not None else "heuristic"
        provenance["delta"] = provenance["s"]
        return SingularityProfile(n, d, -1, 1, provenance=provenance), None

    if s_user == -1:
        raise ValueError("--s -1 (smooth) asserted but singular points were found")

    delta = max(p.multiplicity for p in singular)
    provenance["delta"] = "verified-at-points (lower bound); heuristic as maximum"
    if s_user is not None:
        s = s_user
        provenance["s"] = "user-asserted"
    else:
        s = 0
        provenance["s"] = "heuristic (isolated rational points found)"
    rank = None
    if delta == 2 and all(p.multiplicity == 2 for p in singular):
        rank = min(p.hessian_rank for p in singular)
        provenance["min_hessian_rank"] = "verified-at-points; heuristic as minimum"
    cone_free = None
    worst = [p for p in singular if p.multiplicity == delta]
    if worst:
        cone_free = all(not is_cone(p.tangent_cone) for p in worst)
    return SingularityProfile(n, d, s, delta, rank, provenance=provenance), cone_free


def _merge_with_certificates(
    criteria_verdict: StabilityVerdict, outcome: SearchOutcome
) -> tuple[Status, list[Reason], list[str]]:
    """Combine criteria output with exactly verified certificates.

    A strict certificate settles NotSemiStable.  A non-strict certificate
    plus a SemiStable criterion is the strictly-semistable situation: the
    status stays SemiStable and the certificate documents non-stability.
    Certificates are exact, so on contradiction they win and the conflict is
    reported.
    """
    reasons = list(criteria_verdict.reasons)
    conflicts: list[str] = []
    crit = criteria_verdict.status

    if outcome.strict is not None:
        reasons.append(
            Reason(
                criterion="hm-certificate",
                note=f"strict certificate with r = {outcome.strict.r}",
                inputs={"strict": True},
            )
        )
        if crit.is_positive:
            conflicts.append(
                "a verified strict certificate contradicts a positive criterion; "
                "the supplied singularity data is wrong (certificate wins)"
            )
        return Status.NOT_SEMISTABLE, reasons, conflicts

    if outcome.nonstrict is not None:
        reasons.append(
            Reason(
                criterion="hm-certificate",
                note=f"non-strict certificate with r = {outcome.nonstrict.r}",
                inputs={"strict": False},
            )
        )
        if crit == Status.STABLE:
            conflicts.append(
                "a verified non-strict certificate contradicts a Stable criterion; "
                "the supplied singularity data is wrong (certificate wins)"
            )
            return Status.NOT_STABLE, reasons, conflicts
        if crit == Status.SEMISTABLE:
            return Status.SEMISTABLE, reasons, conflicts
        return Status.NOT_STABLE, reasons, conflicts

    return crit, reasons, conflicts


def analyze(f: HomogeneousPoly, options: AnalysisOptions) -> AnalysisReport:
    scan = scan_singular_points(f, options.height, options.field_sizes)
    points = list(scan.points)
    for p in options.extra_points:
        if p not in points:
            points.append(p)
    points.sort(key=lambda p: p.coords)
    local = [analyze_point(f, p) for p in points]
    singular = [p for p in local if p.multiplicity >= 2]

    profile, cone_free = build_profile(singular, f.n, f.d, options.s)
    criteria_verdict = combined_verdict(profile, cone_free)

    frame_points = tuple(p.point for p in singular)
    outcome = search_destabilization(f, options.search, frame_points)
    status, reasons, conflicts = _merge_with_certificates(criteria_verdict, outcome)

    stamp = (
        datetime.datetime.now(datetime.timezone.utc).isoformat() if options.timestamp else None
    )
    return AnalysisReport(
        polynomial=f,
        scan=scan,
        points=local,
        profile=profile,
        cone_free=cone_free,
        criteria=criteria_verdict,
        search_outcome=outcome,
        status=status,
        reasons=reasons,
        conflicts=conflicts,
        seed=options.search.seed,
        timestamp=stamp,
    )
