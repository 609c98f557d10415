"""Built-in families of non-semistable hypersurfaces with known certificates.

Family "fn" (degree 3): x0^2*xn + x1^3 + ... + x_{n-1}^3 with weights
(3(n-1), 1, ..., 1, -4(n-1)).  Family "gn" (degree 4): x0^2*xn^2 +
x0*x_{n-1}^3 + x1^4 + ... + x_{n-2}^4 with weights (3n+2, 1, ..., 1, -n, -3n).
Both certify non-semistability at the identity coordinate change.  The
degree-4 family degenerates at n = 2 to x0^2*x2^2 + x0*x1^3 with the same
weight pattern (empty middle block); callers treat that as an edge case.
"""
from __future__ import annotations

from .certificates import Certificate
from .linalg import RationalMatrix
from .polynomials import HomogeneousPoly
from .weights import WeightVector

FAMILIES = ("fn", "gn")


def family_poly(family: str, n: int) -> HomogeneousPoly:
    if family == "fn":
        if n < 2:
            raise ValueError("family fn needs n >= 2")
        terms = {tuple(2 if j == 0 else (1 if j == n else 0) for j in range(n + 1)): 1}
        for k in range(1, n):
            terms[tuple(3 if j == k else 0 for j in range(n + 1))] = 1
        return HomogeneousPoly.make(n, 3, terms)
    if family == "gn":
        if n < 2:
            raise ValueError("family gn needs n >= 2")
        terms = {tuple(2 if j in (0, n) else 0 for j in range(n + 1)): 1}
        cusp = [0] * (n + 1)
        cusp[0], cusp[n - 1] = 1, 3
        terms[tuple(cusp)] = 1
        for k in range(1, n - 1):
            terms[tuple(4 if j == k else 0 for j in range(n + 1))] = 1
        return HomogeneousPoly.make(n, 4, terms)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def family_weights(family: str, n: int) -> WeightVector:
    if family == "fn":
        return WeightVector((3 * (n - 1),) + (1,) * (n - 1) + (-4 * (n - 1),))
    if family == "gn":
        return WeightVector((3 * n + 2,) + (1,) * (n - 2) + (-n, -3 * n))
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def family_certificate(family: str, n: int) -> tuple[HomogeneousPoly, Certificate]:
    """The family polynomial with its strict identity-frame certificate."""
    f = family_poly(family, n)
    cert = Certificate(RationalMatrix.identity(n + 1), family_weights(family, n), strict=True)
    return f, cert
