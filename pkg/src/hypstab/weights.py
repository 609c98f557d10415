"""Integer weight vectors of diagonal one-parameter subgroups.

A weight vector is an integer tuple ``r`` with ``sum(r) == 0`` and ``r != 0``;
it pairs with a monomial exponent vector through the dot product.  A
polynomial whose support pairs non-negatively (positively) with some ``r``
after a linear coordinate change is not stable (not semi-stable).

Sorting ``r`` in non-increasing order is a normalization, not a storage
requirement: coordinate permutations are absorbed into the GL(n+1) part of a
certificate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .polynomials import Exponent, HomogeneousPoly


class WeightError(ValueError):
    """Invalid weight vector or weight operation."""


@dataclass(frozen=True)
class WeightVector:
    r: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(int(v) for v in self.r))
        if len(self.r) < 2:
            raise WeightError("need at least two weights")
        if all(v == 0 for v in self.r):
            raise WeightError("weight vector must be nonzero")
        if sum(self.r) != 0:
            raise WeightError(f"weights must sum to zero, got {sum(self.r)}")

    @property
    def n(self) -> int:
        return len(self.r) - 1

    def __iter__(self):
        return iter(self.r)

    def __getitem__(self, j: int) -> int:
        return self.r[j]

    def __len__(self) -> int:
        return len(self.r)

    @property
    def is_sorted(self) -> bool:
        return all(a >= b for a, b in zip(self.r, self.r[1:]))

    def reduced(self) -> "WeightVector":
        """Divide by the gcd of the entries (canonical primitive form)."""
        g = 0
        for v in self.r:
            g = gcd(g, abs(v))
        return self if g <= 1 else WeightVector(tuple(v // g for v in self.r))

    def sorted_descending(self) -> "WeightVector":
        return WeightVector(tuple(sorted(self.r, reverse=True)))

    def sorting_permutation(self) -> tuple[int, ...]:
        """Images p with sorted[k] = r[j] for p[j] = k (stable order)."""
        order = sorted(range(len(self.r)), key=lambda j: (-self.r[j], j))
        images = [0] * len(self.r)
        for k, j in enumerate(order):
            images[j] = k
        return tuple(images)

    def last_nonnegative_index(self) -> int:
        """Largest t with r_t >= 0; requires sorted order."""
        self._require_sorted()
        if self.r[0] < 0:
            raise WeightError("sorted weight vector cannot be all-negative")
        return max(j for j, v in enumerate(self.r) if v >= 0)

    def last_positive_index(self) -> int:
        """Largest t with r_t > 0; requires sorted order."""
        self._require_sorted()
        return max(j for j, v in enumerate(self.r) if v > 0)

    def _require_sorted(self):
        if not self.is_sorted:
            raise WeightError(f"{self.r} is not sorted in non-increasing order")

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.r) + ")"


def weight_of(r: WeightVector, exp: Exponent) -> int:
    """Pairing sum_j r_j * i_j of a weight vector with a monomial."""
    if len(exp) != len(r):
        raise WeightError(f"length mismatch: {len(r)} weights vs {len(exp)} exponents")
    return sum(v * e for v, e in zip(r.r, exp))


def membership(f: HomogeneousPoly, r: WeightVector, strict: bool) -> bool:
    """Does every support monomial of ``f`` pair >= 0 (strict: > 0) with r?"""
    if f.is_zero:
        raise WeightError("membership is undefined for the zero polynomial")
    if strict:
        return all(weight_of(r, exp) > 0 for exp, _ in f.terms)
    return all(weight_of(r, exp) >= 0 for exp, _ in f.terms)


def first_violation(f: HomogeneousPoly, r: WeightVector, strict: bool):
    """First (graded-lex order) support monomial with a bad weight, or None."""
    for exp, _ in f.terms:
        w = weight_of(r, exp)
        if w < 0 or (strict and w == 0):
            return exp, w
    return None


def weight_inequality_filter(r: WeightVector, s: int, d: int, strict: bool = False) -> bool:
    """Necessary conditions on a sorted ``r`` admitting members whose singular
    locus has dimension at most ``s``.

    Returns True iff all hold; a False return prunes ``r`` from searches under
    a singular-locus-dimension assumption.  The third condition is skipped at
    ``s == n - 2``.
    """
    r._require_sorted()
    n = r.n
    if not 0 <= s <= n - 2:
        raise WeightError(f"s = {s} out of range 0..{n - 2}")
    if d < 2:
        raise WeightError(f"degree {d} too small")
    t = r.last_positive_index() if strict else r.last_nonnegative_index()
    if 2 * (t + 1) < n - s:
        return False
    second = Fraction(r[0], d - 1) + r[n - 1 - s]
    if second < 0 or (strict and second == 0):
        return False
    if s != n - 2:
        third = sum(r[j] for j in range(1, n - 1 - s))
        if third < 0 or (strict and third == 0):
            return False
    return True
