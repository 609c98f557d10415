"""Torus destabilization at fixed coordinates, decided by exact LP.

The question: does some nonzero integer vector ``r`` with ``sum(r) == 0``
pair positively (strict) or non-negatively (non-strict) with every support
monomial of ``f``?

Both modes are decided in the small barycentric space.  Strict feasibility
is scale-invariant and dualizes to: the centroid ``(d/(n+1), ..., d/(n+1))``
of the degree simplex lies in the convex hull of the support; when it does
not, the Farkas certificate of that small LP is exactly a strictly
destabilizing weight vector.  The non-strict question asks whether a
polyhedral cone contains a nonzero vector; it is decided by ``2(n+1)``
probes that pin one coordinate to +-1, each solved through its
(n+1)-row dual system, with the probe witness recovered from the dual's
Farkas certificate.

Infeasible answers carry a barycentric certificate: convex weights over
support monomials averaging to the centroid.  In the non-strict case the
weights are strictly positive and the shifted monomials span the full
sum-zero hyperplane, which forces the cone to be trivial.  Witnesses and
certificates are re-verified before being returned.

A brute-force enumeration oracle over a box of integer vectors is provided
as an independent cross-check; it shares no code path with the LP.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .linalg import nullspace_vector, rational_rank
from .polynomials import Exponent, HomogeneousPoly
from .simplex import INFEASIBLE, OPTIMAL, SimplexError, solve_lp
from .weights import WeightVector, membership

BarycentricCertificate = tuple[tuple[Exponent, Fraction], ...]


@dataclass(frozen=True)
class TorusDecision:
    feasible: bool
    strict: bool
    witness: WeightVector | None = None
    certificate: BarycentricCertificate | None = None

    def to_json(self) -> dict:
        out = {"feasible": self.feasible, "strict": self.strict}
        out["witness"] = list(self.witness.r) if self.witness else None
        if self.certificate is not None:
            out["infeasibility_certificate"] = [
                {"monomial": list(exp), "lambda": str(lam)} for exp, lam in self.certificate
            ]
        else:
            out["infeasibility_certificate"] = None
        return out


def _centroid(n: int, d: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(d, n + 1) for _ in range(n + 1))


def _integer_weight(values) -> WeightVector:
    values = [Fraction(v) for v in values]
    denom = lcm(*(v.denominator for v in values))
    ints = [int(v * denom) for v in values]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return WeightVector(tuple(ints))


def _barycentric_system(support, n: int, d: int):
    """Equality system: lambda >= 0, sum lambda = 1, sum lambda_i * i = centroid."""
    c = _centroid(n, d)
    N = len(support)
    A = [[Fraction(1)] * N]
    b = [Fraction(1)]
    for j in range(n + 1):
        A.append([Fraction(exp[j]) for exp in support])
        b.append(c[j])
    return A, b


def _verify_barycentric(support, lambdas, n: int, d: int, positive: bool) -> None:
    c = _centroid(n, d)
    if sum(lambdas) != 1:
        raise SimplexError("barycentric weights do not sum to 1")
    if any(l < 0 for l in lambdas) or (positive and any(l == 0 for l in lambdas)):
        raise SimplexError("barycentric weights have wrong signs")
    for j in range(n + 1):
        if sum(l * exp[j] for l, exp in zip(lambdas, support)) != c[j]:
            raise SimplexError("barycentric combination misses the centroid")
    if positive:
        shifted = [[Fraction(e) - cj for e, cj in zip(exp, c)] for exp in support]
        if rational_rank(shifted) != n:
            raise SimplexError("shifted support does not span the direction space")


def _corner_certificate(support, n: int, d: int) -> BarycentricCertificate | None:
    """When every pure power x_j^d is in the support, the uniform weights on
    those corners certify infeasibility in both modes: any nonzero zero-sum
    vector has a negative coordinate, hence a negative corner weight."""
    corners = [tuple(d if k == j else 0 for k in range(n + 1)) for j in range(n + 1)]
    present = set(support)
    if all(c in present for c in corners):
        lam = Fraction(1, n + 1)
        return tuple((c, lam) for c in corners)
    return None


def _strict_witness_from_farkas(y, n: int) -> list[Fraction]:
    """Turn a Farkas certificate of the barycentric system into a strictly
    destabilizing rational vector: project the negated coordinate part onto
    the zero-sum hyperplane."""
    coord = y[1:]
    shift = sum(coord) / (n + 1)
    return [shift - v for v in coord]


def _probe_dual_system(support, n: int, k: int, sign: int):
    """Dual of the probe {r.i >= 0 for all i, sum r = 0, r_k = sign}: the
    system {sum mu_i * i + alpha * 1 = -sign * e_k, mu >= 0, alpha free} over
    n+1 coordinate rows.  The probe is feasible iff this is infeasible, and
    then the Farkas vector y yields the probe witness r = -y."""
    N = len(support)
    A = []
    b = []
    for j in range(n + 1):
        row = [Fraction(exp[j]) for exp in support] + [Fraction(1), Fraction(-1)]
        A.append(row)
        b.append(Fraction(-sign if j == k else 0))
    return A, b, N + 2


def torus_destabilize(f: HomogeneousPoly, strict: bool) -> TorusDecision:
    """Decide destabilizability of ``f`` by a diagonal torus in the given
    coordinates; total function over nonzero polynomials."""
    if f.is_zero:
        raise ValueError("cannot destabilize the zero polynomial")
    support = f.support()
    n, d = f.n, f.d

    corner_cert = _corner_certificate(support, n, d)
    if corner_cert is not None:
        _verify_barycentric(
            [exp for exp, _ in corner_cert],
            [lam for _, lam in corner_cert],
            n,
            d,
            positive=not strict,
        )
        return TorusDecision(False, strict, certificate=corner_cert)

    if strict:
        A, b = _barycentric_system(support, n, d)
        result = solve_lp(A, b, [Fraction(0)] * len(support))
        if result.status == OPTIMAL:
            lambdas = result.x
            _verify_barycentric(support, lambdas, n, d, positive=False)
            cert = tuple((exp, lam) for exp, lam in zip(support, lambdas) if lam != 0)
            return TorusDecision(False, True, certificate=cert)
        if result.status != INFEASIBLE:
            raise SimplexError("barycentric system cannot be unbounded")
        witness = _integer_weight(_strict_witness_from_farkas(result.farkas, n))
        if not membership(f, witness, strict=True):
            raise SimplexError("strict witness failed re-verification")
        return TorusDecision(True, True, witness=witness)

    # Degenerate fast path: a nonzero zero-sum vector orthogonal to the whole
    # support gives every monomial weight 0.
    flat = nullspace_vector(list(support) + [[1] * (n + 1)])
    if flat is not None:
        witness = _integer_weight(flat)
        if not membership(f, witness, strict=False):
            raise SimplexError("orthogonal witness failed re-verification")
        return TorusDecision(True, False, witness=witness)

    for k in range(n + 1):
        for sign in (1, -1):
            A, b, nvars = _probe_dual_system(support, n, k, sign)
            result = solve_lp(A, b, [Fraction(0)] * nvars)
            if result.status == OPTIMAL:
                continue  # probe infeasible; try the next pinned coordinate
            if result.status != INFEASIBLE:
                raise SimplexError("probe dual cannot be unbounded")
            witness = _integer_weight([-v for v in result.farkas])
            if not membership(f, witness, strict=False):
                raise SimplexError("non-strict witness failed re-verification")
            return TorusDecision(True, False, witness=witness)

    # The cone is trivial: build a strictly positive barycentric certificate
    # by maximizing each weight over the small polytope and averaging.
    A, b = _barycentric_system(support, n, d)
    N = len(support)
    total = [Fraction(0)] * N
    for t in range(N):
        cost = [Fraction(0)] * N
        cost[t] = Fraction(-1)
        result = solve_lp(A, b, cost)
        if result.status != OPTIMAL or result.x[t] == 0:
            raise SimplexError("trivial cone without strictly positive certificate")
        for j in range(N):
            total[j] += result.x[j]
    lambdas = [v / N for v in total]
    _verify_barycentric(support, lambdas, n, d, positive=True)
    return TorusDecision(False, False, certificate=tuple(zip(support, lambdas)))


def enumerate_weight_oracle(f: HomogeneousPoly, bound: int, strict: bool) -> WeightVector | None:
    """Exhaustive scan of integer vectors with entries in [-bound, bound],
    zero sum, returning the lexicographically first member of the weight
    cone, else None.

    Independent of the LP path; intended for small n.  The scan is
    vectorized per leading coordinate, preserving lexicographic order.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if f.is_zero:
        raise ValueError("cannot destabilize the zero polynomial")
    n = f.n
    supp = np.array(f.support(), dtype=np.int64)
    values = np.arange(-bound, bound + 1, dtype=np.int64)
    if n == 1:
        free_grid = np.zeros((1, 0), dtype=np.int64)
    else:
        mesh = np.meshgrid(*([values] * (n - 1)), indexing="ij")
        free_grid = np.stack([m.reshape(-1) for m in mesh], axis=1)

    for r0 in range(-bound, bound + 1):
        first = np.full((free_grid.shape[0], 1), r0, dtype=np.int64)
        rs = np.concatenate([first, free_grid], axis=1)
        last = -rs.sum(axis=1, keepdims=True)
        rs = np.concatenate([rs, last], axis=1)
        ok = np.abs(last[:, 0]) <= bound
        ok &= (rs != 0).any(axis=1)
        weights = rs @ supp.T
        ok &= (weights >= (1 if strict else 0)).all(axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            candidate = WeightVector(tuple(int(v) for v in rs[hits[0]]))
            if not membership(f, candidate, strict):
                raise RuntimeError("oracle produced a non-member; enumeration bug")
            return candidate
    return None
