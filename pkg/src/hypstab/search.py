"""Destabilization search over coordinate frames.

The torus LP is complete at fixed coordinates, so the search problem is
choosing coordinate frames.  Strategies: relocate each verified rational
singular point to the last coordinate (where destabilizing weight vectors
concentrate), random coordinate permutations, and random integer unipotent
changes composed with point frames and permutations.  Frames are generated
deterministically from the seed; results are merged in strategy order, then
frame order, so identical inputs give identical outputs.

Each frame first tries a small catalog of sorted candidate weight vectors
(cheap exact membership tests); under an asserted singular-locus dimension
the catalog is pruned by the necessary weight inequalities, which never
changes outcomes because the LP that follows is complete per frame.  Absence
of a certificate within budget is reported as exactly that, never as a
stability claim.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd

from .certificates import Certificate, verify_certificate
from .linalg import RationalMatrix, apply_linear_change, matrix_moving_point_last
from .local_analysis import ProjectivePoint
from .polynomials import Exponent, HomogeneousPoly
from .torus import TorusDecision, torus_destabilize
from .verdicts import Status
from .weights import WeightError, WeightVector, membership, weight_inequality_filter

_CATALOG_BOUND = 4
STRATEGIES = ("singular-point-to-Q", "permutations", "random-unipotent")


@dataclass(frozen=True)
class SearchConfig:
    budget: int = 50
    seed: int = 0
    bound: int = 2
    strategies: tuple[str, ...] = STRATEGIES
    assume_s: int | None = None

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.bound < 1:
            raise ValueError("matrix entry bound must be >= 1")
        unknown = set(self.strategies) - set(STRATEGIES)
        if unknown:
            raise ValueError(f"unknown strategies {sorted(unknown)}")


@dataclass
class FrameRecord:
    strategy: str
    index: int
    strict_feasible: bool
    nonstrict_feasible: bool | None

    def to_json(self) -> dict:
        return {
            "strategy": self.strategy,
            "index": self.index,
            "strict_feasible": self.strict_feasible,
            "nonstrict_feasible": self.nonstrict_feasible,
        }


@dataclass
class SearchOutcome:
    strict: Certificate | None = None
    nonstrict: Certificate | None = None
    frames_tried: int = 0
    frames: list[FrameRecord] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.strict is not None or self.nonstrict is not None


def sorted_weight_catalog(n: int, bound: int = _CATALOG_BOUND) -> tuple[WeightVector, ...]:
    """All primitive non-increasing zero-sum integer vectors with entries in
    [-bound, bound], in deterministic order."""
    out = []
    values = range(bound, -bound - 1, -1)
    for combo in combinations_with_replacement(values, n + 1):
        if sum(combo) != 0 or all(v == 0 for v in combo):
            continue
        g = 0
        for v in combo:
            g = gcd(g, abs(v))
        if g != 1:
            continue
        out.append(WeightVector(combo))
    return tuple(out)


def _random_unipotent(rng: random.Random, size: int, bound: int, upper: bool) -> RationalMatrix:
    rows = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for i in range(size):
        rng_range = range(i + 1, size) if upper else range(0, i)
        for j in rng_range:
            rows[i][j] = Fraction(rng.randint(-bound, bound))
    return RationalMatrix.from_rows(rows)


def _random_permutation(rng: random.Random, size: int) -> RationalMatrix:
    images = list(range(size))
    rng.shuffle(images)
    return RationalMatrix.permutation(images)


def _frames(cfg: SearchConfig, size: int, points: tuple[ProjectivePoint, ...]):
    """Deterministic frame stream: (strategy, matrix), identity first."""
    rng = random.Random(cfg.seed)
    point_frames = [matrix_moving_point_last(p.coords) for p in points]
    if "singular-point-to-Q" in cfg.strategies:
        yield "singular-point-to-Q", RationalMatrix.identity(size)
        for frame in point_frames:
            yield "singular-point-to-Q", frame
    if not {"permutations", "random-unipotent"} & set(cfg.strategies):
        return
    while True:
        if "permutations" in cfg.strategies:
            yield "permutations", _random_permutation(rng, size)
        if "random-unipotent" in cfg.strategies:
            tau = _random_unipotent(rng, size, cfg.bound, upper=True)
            if point_frames:
                base = point_frames[rng.randrange(len(point_frames))]
                yield "random-unipotent", tau @ base
            else:
                yield "random-unipotent", tau @ _random_permutation(rng, size)
            lower = _random_unipotent(rng, size, cfg.bound, upper=False)
            yield "random-unipotent", lower @ _random_permutation(rng, size)


def _catalog_hit(
    g: HomogeneousPoly, catalog, assume_s: int | None, d: int, strict: bool
) -> WeightVector | None:
    for cand in catalog:
        if assume_s is not None:
            try:
                if not weight_inequality_filter(cand, assume_s, d, strict=strict):
                    continue
            except WeightError:
                pass  # filter inapplicable for this s; candidate stays
        if membership(g, cand, strict=strict):
            return cand
    return None


def search_destabilization(
    f: HomogeneousPoly,
    cfg: SearchConfig,
    points: tuple[ProjectivePoint, ...] = (),
) -> SearchOutcome:
    """Search for destabilization certificates of ``f`` within the frame
    budget.  Any returned certificate has been re-verified from scratch."""
    size = f.n + 1
    outcome = SearchOutcome()
    catalog = sorted_weight_catalog(f.n)
    decision_cache: dict[tuple[bool, tuple[Exponent, ...]], TorusDecision] = {}

    def decide(g: HomogeneousPoly, strict: bool) -> TorusDecision:
        key = (strict, g.support())
        if key not in decision_cache:
            decision_cache[key] = torus_destabilize(g, strict)
        return decision_cache[key]

    frame_stream = _frames(cfg, size, points)
    for index in range(cfg.budget):
        try:
            strategy, sigma = next(frame_stream)
        except StopIteration:
            break
        outcome.frames_tried += 1
        g = apply_linear_change(f, sigma)

        witness = _catalog_hit(g, catalog, cfg.assume_s, f.d, strict=True)
        strict_feasible = witness is not None
        if witness is None:
            decision = decide(g, strict=True)
            strict_feasible = decision.feasible
            witness = decision.witness
        if witness is not None:
            cert = Certificate(sigma, witness.reduced(), strict=True)
            if verify_certificate(f, cert).status != Status.NOT_SEMISTABLE:
                raise RuntimeError("strict certificate failed final re-verification")
            outcome.strict = cert
            outcome.frames.append(FrameRecord(strategy, index, True, None))
            return outcome

        nonstrict_feasible: bool | None = None
        if outcome.nonstrict is None:
            witness = _catalog_hit(g, catalog, cfg.assume_s, f.d, strict=False)
            nonstrict_feasible = witness is not None
            if witness is None:
                decision = decide(g, strict=False)
                nonstrict_feasible = decision.feasible
                witness = decision.witness
            if witness is not None:
                cert = Certificate(sigma, witness.reduced(), strict=False)
                if verify_certificate(f, cert).status != Status.NOT_STABLE:
                    raise RuntimeError("non-strict certificate failed final re-verification")
                outcome.nonstrict = cert
        outcome.frames.append(FrameRecord(strategy, index, strict_feasible, nonstrict_feasible))
    return outcome
