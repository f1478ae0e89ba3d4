"""Independent simultaneous root-finder used to validate the icosahedral pipeline.

Nothing here imports the Klein machinery; keep it that way so the
oracle stays an independent check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import NoConvergence
from .numeric import DEFAULT_TOLERANCES, Tolerances, as_complex

MAX_ITERATIONS = 200
# Fixed, irrational angular offset for the starting circle.
_ANGLE_OFFSET = math.pi * (math.sqrt(5) - 1) / 7
_EPS = 2.0 ** -52


@dataclass(frozen=True)
class RootSet:
    values: tuple
    iterations: int
    converged: bool


def _eval_with_derivative(coeffs, z):
    p = coeffs[0]
    dp = 0j
    bound = abs(coeffs[0])
    for c in coeffs[1:]:
        dp = dp * z + p
        p = p * z + c
        bound = bound * abs(z) + abs(c)
    return p, dp, bound


def aberth_roots(coeffs: Sequence[complex], tol: Tolerances = DEFAULT_TOLERANCES) -> RootSet:
    """All roots of a monic polynomial (coefficients highest degree first).

    Stops when the largest Aberth correction drops below ``1e-14 * radius``
    or when every estimate already evaluates to rounding noise; raises
    :class:`NoConvergence` after 200 sweeps.
    """
    coeffs = [as_complex(c, "coefficient") for c in coeffs]
    n = len(coeffs) - 1
    if n < 1:
        raise ValueError("polynomial degree must be at least 1")
    if coeffs[0] != 1:
        raise ValueError("leading coefficient must be 1")
    if n == 1:
        return RootSet((-coeffs[1],), 0, True)

    radius = 1.0 + max(abs(c) for c in coeffs[1:])
    z = [cmath.rect(radius, 2 * math.pi * k / n + _ANGLE_OFFSET) for k in range(n)]
    corrections = [math.inf] * n
    scale = max(1.0, max(abs(c) for c in coeffs))

    for iteration in range(1, MAX_ITERATIONS + 1):
        quiet = True
        for i in range(n):
            p, dp, bound = _eval_with_derivative(coeffs, z[i])
            if abs(p) > 8 * n * _EPS * bound:
                quiet = False
            if p == 0:
                corrections[i] = 0.0
                continue
            ratio = p / dp if dp != 0 else p
            repulsion = sum(1.0 / (z[i] - z[j]) for j in range(n) if j != i and z[i] != z[j])
            delta = ratio / (1.0 - ratio * repulsion)
            # Gauss-Seidel style update: later roots see this one's new value
            z[i] -= delta
            corrections[i] = abs(delta)
        if quiet or max(corrections) < 1e-14 * radius:
            values = tuple(z)
            converged = all(
                abs(_eval_with_derivative(coeffs, v)[0]) < tol.residual_tol * scale for v in values
            )
            return RootSet(values, iteration, converged)

    raise NoConvergence(
        f"Aberth iteration did not converge in {MAX_ITERATIONS} sweeps",
        values=z, corrections=corrections, iterations=MAX_ITERATIONS,
    )


def _has_perfect_matching(allowed):
    n = len(allowed)
    match_right = [-1] * n

    def augment(i, seen):
        for j in range(n):
            if allowed[i][j] and not seen[j]:
                seen[j] = True
                if match_right[j] < 0 or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    return all(augment(i, [False] * n) for i in range(n))


def match_root_sets(a: Sequence[complex], b: Sequence[complex]) -> float:
    """Smallest achievable maximum pairing distance between two root multisets.

    Exact bottleneck assignment: binary search over the candidate
    distances with a bipartite-matching feasibility test.
    """
    if len(a) != len(b):
        raise ValueError(f"root sets differ in length: {len(a)} vs {len(b)}")
    if not a:
        return 0.0
    dist = [[abs(complex(x) - complex(y)) for y in b] for x in a]
    candidates = sorted({d for row in dist for d in row})
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        limit = candidates[mid]
        if _has_perfect_matching([[d <= limit for d in row] for row in dist]):
            hi = mid
        else:
            lo = mid + 1
    return candidates[lo]


def poly_from_roots(roots: Sequence[complex]) -> list:
    """Monic coefficients (highest first) of prod (x - root)."""
    coeffs = [1 + 0j]
    for r in roots:
        coeffs = [c - r * prev for c, prev in zip(coeffs + [0j], [0j] + coeffs)]
    return coeffs
