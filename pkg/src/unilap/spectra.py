"""Laplacian assembly, exact interval counts, and the floating cross-check.

The half-open count m[a, b) is the package's primitive: eigenvalues of L in
[a, b) number negatives(L - bI) - negatives(L - aI), and both terms come
from the exact congruence kernel. Floating-point spectra (cyclic Jacobi)
exist only as an independent oracle; eigenvalue 1 occurs with high
multiplicity in the families studied here, so float counting at that
boundary is never authoritative.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    EdgeNotPresentError,
    InvalidIntervalError,
    InvalidParameterError,
    NumericFailure,
)
from .graphs import Graph
from .linalg import ExactMatrix, inertia, nullity


def laplacian_rows(g: Graph) -> list[list[int]]:
    """Degree diagonal minus adjacency, as plain integers."""
    rows = [[0] * g.n for _ in range(g.n)]
    for v in range(g.n):
        rows[v][v] = g.degree(v)
        for w in g.adj[v]:
            rows[v][w] = -1
    return rows


def laplacian(g: Graph) -> ExactMatrix:
    return ExactMatrix(laplacian_rows(g))


def laplacian_apply(g: Graph, vec: Sequence[int]) -> list[int]:
    """L(g) @ vec in exact integer arithmetic."""
    if len(vec) != g.n:
        raise InvalidParameterError("vector length must equal vertex count")
    return [
        g.degree(v) * vec[v] - sum(vec[w] for w in g.adj[v]) for v in range(g.n)
    ]


@dataclass(frozen=True)
class IntervalCount:
    a: Fraction
    b: Fraction
    count: int


def _count_below(g: Graph, c: Fraction) -> int:
    return inertia(laplacian(g).minus_scaled_identity(c)).negatives


def count_interval(g: Graph, a: int | Fraction, b: int | Fraction) -> IntervalCount:
    """Exact number of Laplacian eigenvalues in the half-open interval [a, b)."""
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise InvalidIntervalError(f"need a < b, got [{a}, {b})")
    return IntervalCount(a, b, _count_below(g, b) - _count_below(g, a))


def multiplicity(g: Graph, mu: int | Fraction) -> int:
    """Exact multiplicity of mu as a Laplacian eigenvalue."""
    return nullity(laplacian(g).minus_scaled_identity(Fraction(mu)))


def closed_form_spectrum(family: str, n: int) -> list[float]:
    """Sorted Laplacian spectrum of a path or cycle from the cosine formulas."""
    if family == "path":
        if n < 1:
            raise InvalidParameterError(f"path spectrum needs n >= 1, got {n}")
        values = [2.0 - 2.0 * math.cos(math.pi * k / n) for k in range(n)]
    elif family == "cycle":
        if n < 3:
            raise InvalidParameterError(f"cycle spectrum needs n >= 3, got {n}")
        values = [2.0 - 2.0 * math.cos(2.0 * math.pi * k / n) for k in range(n)]
    else:
        raise InvalidParameterError(f"unknown family {family!r}")
    return sorted(values)


def spectrum_float(g: Graph, tol: float = 1e-10, max_sweeps: int = 100) -> list[float]:
    """All Laplacian eigenvalues by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops below tol; the
    returned values are the sorted diagonal.
    """
    if tol <= 0:
        raise InvalidParameterError("tol must be positive")
    n = g.n
    if n == 1:
        return [0.0]
    a = np.array(laplacian_rows(g), dtype=float)
    # entries below this threshold stay: their total weight is within tol,
    # and rotating on them risks overflow in the angle computation
    skip_below = tol / (2.0 * n)
    mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = float(np.sqrt((a[mask] ** 2).sum()))
        if off < tol:
            return sorted(float(a[i, i]) for i in range(n))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip_below:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    raise NumericFailure(f"Jacobi sweep cap {max_sweeps} hit before off-norm < {tol}")


def check_interlacing(g: Graph, e: tuple[int, int], slack: float = 1e-8) -> bool:
    """Whether the edge-deletion interlacing chain holds for every index.

    Checks mu_i(g) <= mu_{i+1}(g - e) <= mu_{i+1}(g) for i = 1..n-1 under
    float comparison with the given slack.
    """
    u, v = min(e), max(e)
    if not g.has_edge(u, v):
        raise EdgeNotPresentError(f"edge ({u},{v}) not in graph")
    spec_g = spectrum_float(g)
    spec_h = spectrum_float(g.with_edge_removed(u, v))
    return all(
        spec_g[i] <= spec_h[i + 1] + slack and spec_h[i + 1] <= spec_g[i + 1] + slack
        for i in range(g.n - 1)
    )
